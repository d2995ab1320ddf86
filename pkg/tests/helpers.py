"""Independent oracles the library is checked against.

Everything here goes through routes the library does not use: direct
divide-out factorization, math.comb, and plain math.lcm folds. Keeping
these separate from the package is the point; a bug in binomlcm cannot
hide in its own oracle.
"""

import math
from functools import reduce


def vp_by_division(m: int, p: int) -> int:
    """Exponent of p in m, by repeatedly dividing m out. m >= 1."""
    assert m >= 1
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def trial_is_prime(v: int) -> bool:
    if v < 2:
        return False
    return all(v % d for d in range(2, int(math.isqrt(v)) + 1))


def brute_row(n: int) -> list[int]:
    """Row n of Pascal's triangle via math.comb."""
    return [math.comb(n, k) for k in range(n + 1)]


def fold_lcm(values) -> int:
    return reduce(math.lcm, values)


def brute_range_lcm(n: int) -> int:
    """lcm(1..n) by direct fold."""
    return fold_lcm(range(1, n + 1))


def brute_row_lcm(n: int) -> int:
    return fold_lcm(brute_row(n))


def brute_weighted_row_lcm(n: int) -> int:
    return fold_lcm(k * math.comb(n, k) for k in range(1, n + 1))
