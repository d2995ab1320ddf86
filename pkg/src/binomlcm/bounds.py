"""Growth checks for lcm(1..n): classical bounds and the psi ratio.

Checked bounds, each by exact big-integer comparison (the powers are
built exactly; no floats decide a flag):

    2^(n-1) <= lcm(1..n)        for all n >= 1
    2^n     <= lcm(1..n)        for n >= 9 (recorded but not required
                                below 9; see BoundsRecord.lower_2n_required)
    lcm(1..n) <= 3^n            for all n >= 1

The one floating-point quantity is psi_over_n = ln(lcm(1..n)) / n,
computed from the factorization as sum e*ln(p) via compensated
summation. It tracks the classical log lcm(1..n) ~ n growth and is
reporting data only, never a pass/fail criterion.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

from .caps import DEFAULT_CAPS, ResourceCaps, check_cap
from .digits import decimal_digits
from .engine import lcm_range
from .errors import DomainError

__all__ = ["BoundsRecord", "check_bounds", "psi_table", "write_bounds_csv", "BOUNDS_CSV_HEADER"]

BOUNDS_CSV_HEADER = ["n", "lcm_digits", "holds_2nm1", "holds_2n", "holds_3n", "psi_over_n"]


@dataclass(frozen=True)
class BoundsRecord:
    n: int
    lcm_digits: int
    lower_2nm1_holds: bool
    lower_2n_holds: bool
    upper_3n_holds: bool
    psi_over_n: float

    @property
    def lower_2n_required(self) -> bool:
        # The 2^n bound starts at n = 9; below that the flag is
        # informational data, not an obligation.
        return self.n >= 9

    @property
    def enforced_ok(self) -> bool:
        """All bounds that must hold at this n actually hold."""
        return (
            self.lower_2nm1_holds
            and self.upper_3n_holds
            and (self.lower_2n_holds or not self.lower_2n_required)
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "lcm_digits": self.lcm_digits,
            "holds_2nm1": self.lower_2nm1_holds,
            "holds_2n": self.lower_2n_holds,
            "holds_2n_required": self.lower_2n_required,
            "holds_3n": self.upper_3n_holds,
            "psi_over_n": self.psi_over_n,
        }

    def to_csv_row(self) -> list[str]:
        return [
            str(self.n),
            str(self.lcm_digits),
            _fmt_bool(self.lower_2nm1_holds),
            _fmt_bool(self.lower_2n_holds),
            _fmt_bool(self.upper_3n_holds),
            format_psi(self.psi_over_n),
        ]


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def format_psi(x: float) -> str:
    """12 significant digits."""
    return f"{x:.12g}"


def _record(n: int, lcm_value: int, psi: float) -> BoundsRecord:
    return BoundsRecord(
        n=n,
        lcm_digits=decimal_digits(lcm_value),
        lower_2nm1_holds=(1 << (n - 1)) <= lcm_value,
        lower_2n_holds=(1 << n) <= lcm_value,
        upper_3n_holds=lcm_value <= 3**n,
        psi_over_n=psi / n,
    )


def check_bounds(n: int, *, caps: ResourceCaps = DEFAULT_CAPS) -> BoundsRecord:
    """Bounds record for a single n, from the factorization of lcm(1..n)."""
    if n < 1:
        raise DomainError(f"check_bounds requires n >= 1, got {n}")
    factorization = lcm_range(n, caps=caps)
    return _record(n, factorization.expand(), factorization.log_value())


def psi_table(max_n: int, step: int = 1, *, caps: ResourceCaps = DEFAULT_CAPS) -> list[BoundsRecord]:
    """Records at n = step, 2*step, ..., <= max_n, built cumulatively.

    One pass holds the running lcm: lcm(1..n) gains exactly one factor
    p whenever n is a prime power p^a, so each step is a smallest-
    prime-factor lookup plus at most one small multiplication. Far
    cheaper than calling check_bounds per sample point.
    """
    if step < 1:
        raise DomainError(f"psi_table requires step >= 1, got {step}")
    if max_n < 1:
        raise DomainError(f"psi_table requires max_n >= 1, got {max_n}")
    check_cap(max_n, caps.sieve_limit, "psi table max_n")

    spf = _smallest_prime_factors(max_n)
    log_cache: dict[int, float] = {}
    exponents: dict[int, int] = {}
    running = 1
    records = []
    # 3^n advanced by a fixed factor per sample; exact, no pow at huge n.
    three_step = 3**step
    three_n = 1
    for n in range(1, max_n + 1):
        p = spf[n] if n >= 2 else 0
        if p:
            m = n
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            if m == 1:  # n is the prime power p^a
                exponents[p] = a
                running *= p
                if p not in log_cache:
                    log_cache[p] = math.log(p)
        if n % step == 0:
            three_n *= three_step
            psi = math.fsum(e * log_cache[q] for q, e in exponents.items())
            records.append(
                BoundsRecord(
                    n=n,
                    lcm_digits=decimal_digits(running),
                    lower_2nm1_holds=(1 << (n - 1)) <= running,
                    lower_2n_holds=(1 << n) <= running,
                    upper_3n_holds=running <= three_n,
                    psi_over_n=psi / n,
                )
            )
    return records


def _smallest_prime_factors(limit: int) -> list[int]:
    spf = [0] * (limit + 1)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            for m in range(p, limit + 1, p):
                if spf[m] == 0:
                    spf[m] = p
    return spf


def write_bounds_csv(records, stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(BOUNDS_CSV_HEADER)
    for rec in records:
        writer.writerow(rec.to_csv_row())
