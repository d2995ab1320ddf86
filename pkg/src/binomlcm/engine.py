"""Exact lcm computation for integer ranges and binomial rows.

Three routes compute the lcm of a binomial row C(n,0..n), with costs
that scale very differently:

* naive      -- materialize the row (Pascal additions), fold gcd-based
                lcm over it; the oracle everything else is checked
                against, feasible to a few thousand.
* farhi      -- expand(lcm_range(n+1)) / (n+1), exact division; one
                sieve plus one big division.
* valuation  -- per prime p <= n, the largest carry count any entry can
                have (see valuation.max_binomial_valuation); returns a
                factorization and never touches row-sized integers.

Range lcms likewise come in two routes: a gcd fold over 1..n (oracle)
and the prime-power factorization lcm(1..n) = prod p^max{e : p^e <= n}.

All values are exact; nothing in this module goes through floats.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Mapping

from .caps import DEFAULT_CAPS, ResourceCaps, check_cap
from .errors import DomainError, InternalConsistencyError
from .valuation import Prime, max_binomial_valuation

__all__ = [
    "PrimePowerFactorization",
    "BinomialRow",
    "sieve_primes",
    "lcm_range",
    "lcm_sequence",
    "binomial_row",
    "iter_binomial_rows",
    "row_lcm_naive",
    "row_lcm_farhi",
    "row_lcm_valuation",
    "weighted_row_lcm",
]


def _product(values: list[int]) -> int:
    # Balanced pairwise multiplication: much faster than a left fold
    # once the partial products stop fitting in a few machine words.
    if not values:
        return 1
    while len(values) > 1:
        values = [a * b for a, b in zip(values[::2], values[1::2])] + (
            [values[-1]] if len(values) % 2 else []
        )
    return values[0]


class PrimePowerFactorization:
    """A canonical product of prime powers, prod p^e with e >= 1.

    Keys are validated primes in strictly increasing order and zero
    exponents are never stored, so expand() is injective: two distinct
    factorizations always expand to distinct integers.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        seen: dict[Prime, int] = {}
        for p, e in items:
            p = p if isinstance(p, Prime) else Prime(p)
            if not isinstance(e, int) or e < 0:
                raise DomainError(f"exponent of {int(p)} must be a natural, got {e!r}")
            if p in seen:
                raise DomainError(f"duplicate prime {int(p)}")
            if e > 0:
                seen[p] = e
        self._factors = dict(sorted(seen.items()))

    @classmethod
    def _trusted(cls, sorted_items: list[tuple[Prime, int]]) -> "PrimePowerFactorization":
        # Internal fast path: items already sorted, prime, exponent >= 1.
        obj = object.__new__(cls)
        obj._factors = dict(sorted_items)
        return obj

    def items(self):
        return self._factors.items()

    def get(self, p: int, default: int = 0) -> int:
        return self._factors.get(p, default)

    def __getitem__(self, p: int) -> int:
        return self._factors[p]

    def __contains__(self, p: int) -> bool:
        return p in self._factors

    def __iter__(self):
        return iter(self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimePowerFactorization):
            return self._factors == other._factors
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._factors.items()))

    def __repr__(self) -> str:
        inner = " * ".join(f"{int(p)}^{e}" if e > 1 else f"{int(p)}" for p, e in self.items())
        return f"PrimePowerFactorization({inner or '1'})"

    def expand(self) -> int:
        """Multiply the factorization out to an exact integer."""
        return _product([p**e for p, e in self._factors.items()])

    def log_value(self) -> float:
        """ln(expand()) as sum e*ln(p), compensated (never builds the int)."""
        return math.fsum(e * math.log(p) for p, e in self._factors.items())

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [[prime, exponent], ...] in increasing prime order."""
        return [[int(p), e] for p, e in self._factors.items()]


@dataclass(frozen=True)
class BinomialRow:
    """Row n of Pascal's triangle: entries[k] == C(n,k), exactly."""

    n: int
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)


def sieve_primes(limit: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> list[Prime]:
    """All primes <= limit, increasing. Empty for limit < 2."""
    if limit < 0:
        raise DomainError("limit must be a nonnegative integer")
    check_cap(limit, caps.sieve_limit, "sieve limit")
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            start = p * p
            flags[start :: p] = bytearray(len(range(start, limit + 1, p)))
        p += 1
    return [Prime._trusted(i) for i, f in enumerate(flags) if f]


def _range_exponent(p: int, n: int) -> int:
    # Largest e with p^e <= n, by repeated multiplication only.
    e = 1
    q = p
    while q * p <= n:
        q *= p
        e += 1
    return e


def lcm_range(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> PrimePowerFactorization:
    """lcm(1..n) as prod over primes p <= n of p^max{e : p^e <= n}."""
    if n < 1:
        raise DomainError("lcm_range requires n >= 1")
    return PrimePowerFactorization._trusted(
        [(p, _range_exponent(p, n)) for p in sieve_primes(n, caps=caps)]
    )


def lcm_sequence(values: Iterable[int]) -> int:
    """Fold lcm over a nonempty sequence of positive integers.

    Order- and duplication-independent. Zeros are rejected: no sequence
    this library produces contains one, so a zero is a caller bug and
    failing fast beats silently absorbing everything into lcm 0.
    """
    acc = None
    for v in values:
        if v < 1:
            raise DomainError(f"lcm_sequence requires every element >= 1, got {v}")
        acc = v if acc is None else math.lcm(acc, v)
    if acc is None:
        raise DomainError("lcm_sequence requires a nonempty sequence")
    return acc


def iter_binomial_rows(n_max: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> Iterator[BinomialRow]:
    """Yield rows 0..n_max by extending one Pascal row in place.

    Sweeps over many consecutive rows should use this: building row n
    from scratch costs O(n^2) additions, while the incremental sweep
    pays that once for the whole range.
    """
    if n_max < 0:
        raise DomainError("n_max must be a nonnegative integer")
    check_cap(n_max, caps.full_row_n, "binomial row n")
    row = [1]
    yield BinomialRow(0, (1,))
    for n in range(1, n_max + 1):
        nxt = [1] * (n + 1)
        for i in range(1, n):
            nxt[i] = row[i - 1] + row[i]
        row = nxt
        yield BinomialRow(n, tuple(row))


def binomial_row(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> BinomialRow:
    """Row n of Pascal's triangle via the additive recurrence.

    Additions only: the multiplicative formula needs per-entry division,
    and exactness is this library's contract.
    """
    return deque(iter_binomial_rows(n, caps=caps), maxlen=1)[0]


def _fold_row_lcm(row: BinomialRow) -> int:
    return reduce(math.lcm, row.entries)


def _fold_weighted_lcm(row: BinomialRow) -> int:
    return reduce(math.lcm, (k * row.entries[k] for k in range(1, row.n + 1)))


def _fold_half_row_lcm(row: BinomialRow) -> int:
    # First floor(n/2)+1 entries; covers the whole row by symmetry.
    return reduce(math.lcm, row.entries[: row.n // 2 + 1])


def row_lcm_naive(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> int:
    """lcm of C(n,0..n): materialize the row, fold. The oracle route."""
    return _fold_row_lcm(binomial_row(n, caps=caps))


def row_lcm_farhi(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> int:
    """lcm of C(n,0..n) as lcm(1..n+1)/(n+1), with exact division checked.

    (n+1) always divides lcm(1..n+1); a nonzero remainder would falsify
    the identity this route rests on, and raises immediately.
    """
    if n < 0:
        raise DomainError("row_lcm_farhi requires n >= 0")
    numerator = lcm_range(n + 1, caps=caps).expand()
    q, r = divmod(numerator, n + 1)
    if r:
        raise InternalConsistencyError(
            f"lcm(1..{n + 1}) is not divisible by {n + 1}; this falsifies the "
            "row-quotient identity and cannot happen"
        )
    return q


def row_lcm_valuation(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> PrimePowerFactorization:
    """lcm of C(n,0..n) as a factorization, one max-valuation per prime.

    The exponent of p is the largest v_p(C(n,k)) over the half row
    k <= floor(n/2), which by the row symmetry C(n,n-k) = C(n,k) is the
    maximum over the whole row; max_binomial_valuation computes it from
    the base-p digits of n without enumerating k. Scales to n around
    10^5, far past where row materialization stops being feasible.
    """
    if n < 0:
        raise DomainError("row_lcm_valuation requires n >= 0")
    check_cap(n, caps.valuation_n, "valuation-method row n")
    items = []
    for p in sieve_primes(n, caps=caps):
        e = max_binomial_valuation(n, p)
        if e:
            items.append((p, e))
    return PrimePowerFactorization._trusted(items)


def weighted_row_lcm(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> int:
    """lcm of the weighted row k*C(n,k) for k = 1..n."""
    if n < 1:
        raise DomainError("weighted_row_lcm requires n >= 1")
    return _fold_weighted_lcm(binomial_row(n, caps=caps))
