#!/usr/bin/env python3
"""A gallery of the five verified lcm identities, plus the bridge.

For each identity both sides are computed through deliberately
different code paths and compared exactly. The final section shows the
equivalence chain: the weighted-row lcm, the scaled previous-row lcm
(reached from both directions), and lcm(1..n) are all one number.
"""

from binomlcm import (
    Theorem,
    equivalence_chain,
    termwise_identity,
    verify_range,
)

HEADLINES = {
    Theorem.T1: "lcm(1*C(n,1), ..., n*C(n,n))            == lcm(1..n)",
    Theorem.T2: "lcm(C(n,0), ..., C(n,n))                == lcm(1..n+1)/(n+1)",
    Theorem.T3: "n * lcm(C(n-1,0), ..., C(n-1,n-1))      == lcm(1..n)",
    Theorem.T4: "lcm(k*C(n,k), k=1..n)                   == n * lcm(row n-1)",
    Theorem.T5: "n * lcm(first half of row n-1)          == lcm(1..n)",
}

for theorem, headline in HEADLINES.items():
    start = 0 if theorem is Theorem.T2 else 1
    reports = verify_range(theorem, start, 60)
    status = "all hold" if all(r.holds for r in reports) else "FAILURES"
    print(f"{theorem.value}: {headline}")
    sample = reports[11]
    print(f"    n={sample.n}: {sample.lhs} == {sample.rhs}   [{status} for n={start}..60]")
    print(f"    lhs via {sample.lhs_method}")
    print(f"    rhs via {sample.rhs_method}")
    print()

print("TERMWISE: t*C(n,t) == n*C(n-1,t-1), the one-line proof of T4")
checked = sum(termwise_identity(n, t) for n in range(1, 101) for t in range(1, n + 1))
print(f"    {checked} (n,t) pairs checked exhaustively for n <= 100, all equal")
print()

print("CHAIN: one number, four routes")
for n in (9, 30, 120):
    rep = equivalence_chain(n)
    assert rep.all_equal
    print(f"    n={n:>3}: weighted row | n*row(n-1) (bridge) | n*row(n-1) (rewrite) | lcm(1..n)")
    print(f"           {rep.q_nair} == {rep.q_thm4_rhs} == {rep.q_thm3_lhs} == {rep.q_range}")
