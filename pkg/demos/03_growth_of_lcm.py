#!/usr/bin/env python3
"""How fast does lcm(1..n) grow?

Classically: between 2^(n-1) and 3^n, with 2^n a lower bound from
n = 9 on, and ln(lcm(1..n))/n -> 1. The bound flags below come from
exact big-integer comparisons; only the ratio column is floating point.
"""

from binomlcm import check_bounds, psi_table

print("=== the bounds at small n (2^n column is informational below 9) ===")
print(f"{'n':>6} {'digits':>7} {'2^(n-1)<=':>10} {'2^n<=':>7} {'<=3^n':>6} {'psi/n':>10}")
for n in (1, 2, 4, 8, 9, 16, 64, 256, 1024):
    r = check_bounds(n)
    needed = "yes" if r.lower_2n_required else "info"
    print(
        f"{r.n:>6} {r.lcm_digits:>7} {str(r.lower_2nm1_holds):>10} "
        f"{str(r.lower_2n_holds):>5}/{needed} {str(r.upper_3n_holds):>6} {r.psi_over_n:>10.6f}"
    )

print()
print("=== the ratio ln(lcm(1..n))/n marches to 1 ===")
for r in psi_table(100_000, 10_000):
    bar = "#" * round(r.psi_over_n * 60)
    print(f"n={r.n:>6}  ratio={r.psi_over_n:.6f}  {bar}")

print()
print("lcm(1..100000) has", psi_table(100_000, 100_000)[0].lcm_digits, "decimal digits;")
print("nothing here ever rounded it.")
