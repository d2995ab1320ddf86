#!/usr/bin/env python3
"""Three roads to the lcm of a binomial row.

The lcm of C(n,0), C(n,1), ..., C(n,n) can be computed:

  1. naively   -- build the row, fold lcm over it;
  2. by quotient -- lcm(1..n+1) / (n+1), one sieve and one division;
  3. by valuation -- one max-carry-count exponent per prime p <= n.

Routes 2 and 3 never touch the (enormous) row entries, which is the
whole engineering payoff of the identities this package verifies.
"""

from binomlcm import (
    binomial_row,
    decimal_digits,
    row_lcm_farhi,
    row_lcm_naive,
    row_lcm_valuation,
)

print("=== small n: watch all three agree ===")
for n in (4, 6, 10, 30):
    naive = row_lcm_naive(n)
    farhi = row_lcm_farhi(n)
    valuation = row_lcm_valuation(n)
    assert naive == farhi == valuation.expand()
    print(f"n={n:>3}  row lcm = {naive}")
    print(f"       as prime powers: {valuation}")

print()
print("=== n = 500: the row is already unprintable, the lcm is fine ===")
row = binomial_row(500)
print(f"largest row entry C(500,250) has {decimal_digits(row[250])} digits")
value = row_lcm_farhi(500)
print(f"row lcm has {decimal_digits(value)} digits")
print(f"first 60: {str(value)[:60]}...")

print()
print("=== n = 20000: far past where materializing the row makes sense ===")
fact = row_lcm_valuation(20000)
quotient = row_lcm_farhi(20000)
assert fact.expand() == quotient
print(f"valuation route: {len(fact)} prime factors, "
      f"{decimal_digits(quotient)} decimal digits, matches the quotient route exactly")
