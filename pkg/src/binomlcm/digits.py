"""Decimal rendering of huge exact integers.

Range lcms reach tens of thousands of decimal digits. CPython guards
int -> str conversion with an interpreter-wide digit limit (default
4300), so plain str() raises on exactly the values this library exists
to produce. decimal_str() lifts the limit just far enough, on demand.
"""

from __future__ import annotations

import sys

# log10(2) rounded up: bit_length * 30103 // 100000 never undershoots by
# more than one digit, so the +16 slack below is ample.
_LOG10_2_NUM = 30103
_LOG10_2_DEN = 100000


def decimal_digit_bound(x: int) -> int:
    """Upper bound on the decimal digit count of ``x`` (cheap, no str)."""
    if x == 0:
        return 1
    return abs(x).bit_length() * _LOG10_2_NUM // _LOG10_2_DEN + 2


def decimal_str(x: int) -> str:
    """``str(x)`` that works for integers of any size."""
    try:
        return str(x)
    except ValueError:
        # int_max_str_digits guard; raise it process-wide and retry.
        sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), decimal_digit_bound(x) + 16))
        return str(x)


def decimal_digits(x: int) -> int:
    """Exact decimal digit count of ``abs(x)``."""
    return len(decimal_str(abs(x)))
