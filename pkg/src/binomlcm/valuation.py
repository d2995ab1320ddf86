"""p-adic valuations of factorials and binomial coefficients.

Two independent formulas compute the same quantity and are kept
deliberately separate so each can catch bugs in the other:

* Legendre: v_p(n!) = sum over i >= 1 of floor(n / p^i), so
  v_p(C(n,k)) = v_p(n!) - v_p(k!) - v_p((n-k)!).
* Carry counting: v_p(C(n,k)) equals the number of carries produced
  when adding k and n-k in base p.

Everything here is exact integer arithmetic. Base-p digits come from
repeated integer division; floating-point logarithms misround near
prime-power boundaries and are banned from this module.
"""

from __future__ import annotations

import operator

from .errors import DomainError

__all__ = [
    "Prime",
    "legendre_factorial_valuation",
    "kummer_binomial_valuation",
    "binomial_valuation",
    "max_binomial_valuation",
]

# Trial division is deterministic and fast for values up to 2**32
# (at most ~65k candidate divisors); larger inputs are refused rather
# than silently slow or probabilistic.
PRIMALITY_CHECK_LIMIT = 1 << 32


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    f = 3
    while f * f <= v:
        if v % f == 0:
            return False
        f += 2
    return True


class Prime(int):
    """An int that passed a deterministic primality check at construction.

    >>> Prime(7)
    Prime(7)
    >>> Prime(6)
    Traceback (most recent call last):
        ...
    binomlcm.errors.DomainError: 6 is not prime
    """

    __slots__ = ()

    def __new__(cls, value) -> "Prime":
        v = operator.index(value)
        if v > PRIMALITY_CHECK_LIMIT:
            raise DomainError(
                f"{v} exceeds the deterministic primality-check limit 2**32"
            )
        if not _is_prime(v):
            raise DomainError(f"{v} is not prime")
        return super().__new__(cls, v)

    @classmethod
    def _trusted(cls, value: int) -> "Prime":
        # Fast path for values already proved prime (sieve output).
        return int.__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


def _as_prime(p) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


def legendre_factorial_valuation(n: int, p) -> int:
    """v_p(n!) as the exact sum of floor(n / p^i) over p^i <= n.

    The empty sum gives 0 for n = 0 (0! = 1).
    """
    p = _as_prime(p)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def kummer_binomial_valuation(n: int, k: int, p) -> int:
    """v_p(C(n,k)) as the carry count of the base-p addition k + (n-k).

    Digits are consumed least-significant-first by repeated division;
    the shorter operand is implicitly zero-padded, so the carry loop is
    branch-free in the digit values.
    """
    p = _as_prime(p)
    if not 0 <= k <= n:
        raise DomainError(f"require 0 <= k <= n, got n={n}, k={k}")
    a, b = k, n - k
    carry = 0
    carries = 0
    while a or b:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    # A pending carry past the top digit pair cannot generate another
    # carry (0 + 0 + 1 < p), so the loop above counts them all.
    return carries


def binomial_valuation(n: int, k: int, p) -> int:
    """v_p(C(n,k)), carry-counted and cross-checked against Legendre.

    Both formulas run on every call; a disagreement would mean this
    library is broken and raises InternalConsistencyError.
    """
    from .errors import InternalConsistencyError

    p = _as_prime(p)
    if not 0 <= k <= n:
        raise DomainError(f"require 0 <= k <= n, got n={n}, k={k}")
    by_carries = kummer_binomial_valuation(n, k, p)
    by_legendre = (
        legendre_factorial_valuation(n, p)
        - legendre_factorial_valuation(k, p)
        - legendre_factorial_valuation(n - k, p)
    )
    if by_carries != by_legendre:
        raise InternalConsistencyError(
            f"v_{int(p)}(C({n},{k})): carry count {by_carries} != "
            f"Legendre difference {by_legendre}"
        )
    return by_carries


_NEG = -1  # infeasible marker; real borrow counts are >= 0


def max_binomial_valuation(n: int, p) -> int:
    """max over 0 <= k <= n of v_p(C(n,k)).

    v_p(C(n,k)) equals the number of borrows in the base-p subtraction
    n - k, so the maximum is found by choosing, digit by digit, whether
    to force a borrow. That is a two-state dynamic program over the
    base-p digits of n (state: borrow pending or not), O(log_p n) per
    call instead of enumerating every k. The enumeration definition is
    what the test suite checks this against.
    """
    p = _as_prime(p)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    if n == 0:
        return 0
    digits = []
    m = n
    while m:
        digits.append(m % p)
        m //= p
    # f0/f1: best borrow count from the current position up through the
    # top digit, given no-borrow/borrow pending into the position below.
    # Seed: past the top digit a pending borrow is impossible (k <= n).
    f0, f1 = 0, _NEG
    for d in reversed(digits):
        g0 = f0
        if d <= p - 2 and f1 != _NEG:
            g0 = max(g0, 1 + f1)
        if d >= 1:
            g1 = f0
            if f1 != _NEG:
                g1 = max(g1, 1 + f1)
        else:
            g1 = 1 + f1 if f1 != _NEG else _NEG
        f0, f1 = g0, g1
    return f0
