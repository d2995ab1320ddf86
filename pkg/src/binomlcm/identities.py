"""Machine verification of the five row-lcm identities.

The identities, in the ids used throughout this package:

    T1 (Nair)      lcm(1*C(n,1), 2*C(n,2), ..., n*C(n,n)) = lcm(1..n)
    T2 (Farhi)     lcm(C(n,0), ..., C(n,n)) = lcm(1..n+1) / (n+1)
    T3             n * lcm(C(n-1,0), ..., C(n-1,n-1)) = lcm(1..n)
    T4 (bridge)    lcm(1*C(n,1), ..., n*C(n,n))
                       = n * lcm(C(n-1,0), ..., C(n-1,n-1))
    T5 (half row)  n * lcm(C(n-1,0), ..., C(n-1,floor((n-1)/2))) = lcm(1..n)
    TERMWISE       t * C(n,t) = n * C(n-1,t-1), the per-term identity
                   behind T4

T4 is the bridge that makes T1 and T3 equivalent: its left side is
T1's left side and its right side is T3's left side. The report
builders here realize that structurally, not just numerically; the two
shared quantities are computed by the same code paths. Everywhere else
the two sides of a report go through maximally independent routes
(e.g. no left side ever touches the prime-power factorization that
produces the right side), so a single bug cannot silently hold an
identity up.

A false identity is data (holds == False in the report), never an
exception; batch sweeps always run to completion so failures are fully
enumerated. Exceptions are reserved for domain errors and for
internal-consistency violations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .caps import DEFAULT_CAPS, ResourceCaps
from .digits import decimal_str
from .engine import (
    BinomialRow,
    _fold_half_row_lcm,
    _fold_row_lcm,
    _fold_weighted_lcm,
    binomial_row,
    iter_binomial_rows,
    lcm_range,
    row_lcm_farhi,
)
from .errors import DomainError, InternalConsistencyError

__all__ = [
    "Theorem",
    "IdentityReport",
    "EquivalenceChainReport",
    "verify_nair",
    "verify_farhi",
    "verify_theorem3",
    "verify_theorem4",
    "verify_theorem5",
    "termwise_identity",
    "equivalence_chain",
    "verify_range",
    "chain_range",
]


class Theorem(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    TERMWISE = "TERMWISE"


# Provenance labels carried on every report.
_M_WEIGHTED = "fold lcm of k*C(n,k), k=1..n, over a Pascal-built row"
_M_ROW_FOLD = "fold lcm of C(n,k), k=0..n, over a Pascal-built row"
_M_SCALED_PREV = "n * fold lcm of C(n-1,k), k=0..n-1, over a Pascal-built row"
_M_HALF_ROW = "n * fold lcm of C(n-1,k), k=0..floor((n-1)/2)"
_M_RANGE_FACT = "prime-power factorization of lcm(1..n), expanded"
_M_FARHI_QUOT = "lcm(1..n+1)/(n+1) via factorization, exact division checked"
_M_TERM_LHS = "sum of t*C(n,t) over t=1..n, each term checked exactly"
_M_TERM_RHS = "sum of n*C(n-1,t-1) over t=1..n, each term checked exactly"


@dataclass(frozen=True)
class IdentityReport:
    """One verified identity instance; holds is recomputed, never cached."""

    theorem: Theorem
    n: int
    lhs: int
    rhs: int
    holds: bool
    lhs_method: str
    rhs_method: str

    def __post_init__(self):
        if self.holds != (self.lhs == self.rhs):
            raise ValueError("holds must equal (lhs == rhs)")

    @classmethod
    def build(cls, theorem, n, lhs, rhs, lhs_method, rhs_method) -> "IdentityReport":
        return cls(theorem, n, lhs, rhs, lhs == rhs, lhs_method, rhs_method)

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "n": self.n,
            "lhs": decimal_str(self.lhs),
            "rhs": decimal_str(self.rhs),
            "holds": self.holds,
            "lhs_method": self.lhs_method,
            "rhs_method": self.rhs_method,
        }


@dataclass(frozen=True)
class EquivalenceChainReport:
    """The four quantities linked by the T1 -> T4 -> T3 -> range chain.

    q_thm4_rhs and q_thm3_lhs are the same expression by construction
    (that identification is the bridge), so they are computed once and
    reported twice to mirror the chain's structure.
    """

    n: int
    q_nair: int
    q_thm4_rhs: int
    q_thm3_lhs: int
    q_range: int
    all_equal: bool

    def __post_init__(self):
        coincide = self.q_nair == self.q_thm4_rhs == self.q_thm3_lhs == self.q_range
        if self.all_equal != coincide:
            raise ValueError("all_equal must equal the four-way coincidence")

    @classmethod
    def build(cls, n, q_nair, q_mid, q_range) -> "EquivalenceChainReport":
        return cls(n, q_nair, q_mid, q_mid, q_range, q_nair == q_mid == q_range)

    def to_json_dict(self) -> dict:
        return {
            "theorem": "CHAIN",
            "n": self.n,
            "q_nair": decimal_str(self.q_nair),
            "q_thm4_rhs": decimal_str(self.q_thm4_rhs),
            "q_thm3_lhs": decimal_str(self.q_thm3_lhs),
            "q_range": decimal_str(self.q_range),
            "all_equal": self.all_equal,
        }


# --- report builders ------------------------------------------------------
# Single-n entry points and range sweeps share these, so "same quantity,
# same code path" holds no matter how a report was produced.


def _scaled_prev_lcm(n: int, prev: BinomialRow) -> int:
    # T4's right side and T3's left side, one code path for both.
    return n * _fold_row_lcm(prev)


def _nair_report(row: BinomialRow, caps: ResourceCaps) -> IdentityReport:
    n = row.n
    return IdentityReport.build(
        Theorem.T1,
        n,
        _fold_weighted_lcm(row),
        lcm_range(n, caps=caps).expand(),
        _M_WEIGHTED,
        _M_RANGE_FACT,
    )


def _farhi_report(row: BinomialRow, caps: ResourceCaps) -> IdentityReport:
    return IdentityReport.build(
        Theorem.T2,
        row.n,
        _fold_row_lcm(row),
        row_lcm_farhi(row.n, caps=caps),
        _M_ROW_FOLD,
        _M_FARHI_QUOT,
    )


def _theorem3_report(prev: BinomialRow, caps: ResourceCaps) -> IdentityReport:
    n = prev.n + 1
    return IdentityReport.build(
        Theorem.T3,
        n,
        _scaled_prev_lcm(n, prev),
        lcm_range(n, caps=caps).expand(),
        _M_SCALED_PREV,
        _M_RANGE_FACT,
    )


def _theorem4_report(prev: BinomialRow, row: BinomialRow) -> IdentityReport:
    n = row.n
    return IdentityReport.build(
        Theorem.T4,
        n,
        _fold_weighted_lcm(row),
        _scaled_prev_lcm(n, prev),
        _M_WEIGHTED,
        _M_SCALED_PREV,
    )


def _theorem5_report(prev: BinomialRow, caps: ResourceCaps) -> IdentityReport:
    n = prev.n + 1
    half = _fold_half_row_lcm(prev)
    # Sub-check: by symmetry the half row must already carry the full
    # row's lcm. A violation is a library bug, not a failed identity.
    full = _fold_row_lcm(prev)
    if half != full:
        raise InternalConsistencyError(
            f"half-row lcm {half} != full-row lcm {full} for row {prev.n}"
        )
    return IdentityReport.build(
        Theorem.T5,
        n,
        n * half,
        lcm_range(n, caps=caps).expand(),
        _M_HALF_ROW,
        _M_RANGE_FACT,
    )


def _termwise_report(n: int) -> IdentityReport:
    # Exhaustive over t; on failure the report carries the first
    # mismatching pair instead of the (then meaningless) totals.
    lhs_total = 0
    rhs_total = 0
    for t in range(1, n + 1):
        lhs = t * math.comb(n, t)
        rhs = n * math.comb(n - 1, t - 1)
        if lhs != rhs:
            return IdentityReport.build(
                Theorem.TERMWISE,
                n,
                lhs,
                rhs,
                f"t*C(n,t) at first failing t={t}",
                f"n*C(n-1,t-1) at first failing t={t}",
            )
        lhs_total += lhs
        rhs_total += rhs
    return IdentityReport.build(
        Theorem.TERMWISE, n, lhs_total, rhs_total, _M_TERM_LHS, _M_TERM_RHS
    )


def _chain_report(prev: BinomialRow, row: BinomialRow, caps: ResourceCaps) -> EquivalenceChainReport:
    n = row.n
    return EquivalenceChainReport.build(
        n,
        _fold_weighted_lcm(row),
        _scaled_prev_lcm(n, prev),
        lcm_range(n, caps=caps).expand(),
    )


# --- single-n verification ------------------------------------------------


def _require_positive(n: int, what: str) -> None:
    if n < 1:
        raise DomainError(f"{what} requires n >= 1, got {n}")


def verify_nair(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> IdentityReport:
    """T1 at n: weighted-row fold against the range factorization."""
    _require_positive(n, "T1")
    return _nair_report(binomial_row(n, caps=caps), caps)


def verify_farhi(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> IdentityReport:
    """T2 at n (n = 0 included): row fold against the exact quotient."""
    if n < 0:
        raise DomainError(f"T2 requires n >= 0, got {n}")
    return _farhi_report(binomial_row(n, caps=caps), caps)


def verify_theorem3(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> IdentityReport:
    """T3 at n: n times the previous row's lcm against lcm(1..n)."""
    _require_positive(n, "T3")
    return _theorem3_report(binomial_row(n - 1, caps=caps), caps)


def verify_theorem4(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> IdentityReport:
    """T4 at n: the bridge; weighted row against n times the previous row."""
    _require_positive(n, "T4")
    rows = iter_binomial_rows(n, caps=caps)
    prev = None
    for row in rows:
        if row.n == n:
            return _theorem4_report(prev, row)
        prev = row
    raise AssertionError("unreachable")


def verify_theorem5(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> IdentityReport:
    """T5 at n: half of the previous row suffices, by row symmetry."""
    _require_positive(n, "T5")
    return _theorem5_report(binomial_row(n - 1, caps=caps), caps)


def termwise_identity(n: int, t: int) -> bool:
    """Exact check of t*C(n,t) == n*C(n-1,t-1) for 1 <= t <= n."""
    if t < 1 or t > n:
        raise DomainError(f"termwise identity requires 1 <= t <= n, got n={n}, t={t}")
    return t * math.comb(n, t) == n * math.comb(n - 1, t - 1)


def equivalence_chain(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> EquivalenceChainReport:
    """All four chained quantities at n, with their pairwise equality."""
    _require_positive(n, "equivalence chain")
    rows = iter_binomial_rows(n, caps=caps)
    prev = None
    for row in rows:
        if row.n == n:
            return _chain_report(prev, row, caps)
        prev = row
    raise AssertionError("unreachable")


# --- range sweeps ---------------------------------------------------------


_FROM_MIN = {t: 1 for t in Theorem}
_FROM_MIN[Theorem.T2] = 0


def _check_range(first: int, last: int, minimum: int, what: str) -> None:
    if first > last:
        raise DomainError(f"empty range: from {first} > to {last}")
    if first < minimum:
        raise DomainError(f"{what} requires n >= {minimum}, got from={first}")


def _rows_through(last: int, caps: ResourceCaps) -> Iterator[BinomialRow]:
    return iter_binomial_rows(last, caps=caps)


def verify_range(
    theorem: Theorem | str,
    first: int,
    last: int,
    *,
    caps: ResourceCaps = DEFAULT_CAPS,
) -> list[IdentityReport]:
    """One report per n in [first, last], never short-circuiting.

    Rows are built by a single incremental Pascal sweep, so verifying a
    range costs the same row work as building the final row once.
    """
    theorem = Theorem(theorem) if not isinstance(theorem, Theorem) else theorem
    _check_range(first, last, _FROM_MIN[theorem], theorem.value)

    if theorem is Theorem.TERMWISE:
        return [_termwise_report(n) for n in range(first, last + 1)]

    reports = []
    if theorem is Theorem.T1:
        for row in _rows_through(last, caps):
            if row.n >= first:
                reports.append(_nair_report(row, caps))
    elif theorem is Theorem.T2:
        for row in _rows_through(last, caps):
            if row.n >= first:
                reports.append(_farhi_report(row, caps))
    elif theorem is Theorem.T3:
        for prev in _rows_through(last - 1, caps):
            if prev.n + 1 >= first:
                reports.append(_theorem3_report(prev, caps))
    elif theorem is Theorem.T4:
        prev = None
        for row in _rows_through(last, caps):
            if row.n >= first:
                reports.append(_theorem4_report(prev, row))
            prev = row
    elif theorem is Theorem.T5:
        for prev in _rows_through(last - 1, caps):
            if prev.n + 1 >= first:
                reports.append(_theorem5_report(prev, caps))
    else:
        raise AssertionError(f"unhandled theorem {theorem}")
    return reports


def chain_range(
    first: int, last: int, *, caps: ResourceCaps = DEFAULT_CAPS
) -> list[EquivalenceChainReport]:
    """equivalence_chain over [first, last] with one shared row sweep."""
    _check_range(first, last, 1, "equivalence chain")
    reports = []
    prev = None
    for row in _rows_through(last, caps):
        if row.n >= first:
            reports.append(_chain_report(prev, row, caps))
        prev = row
    return reports
