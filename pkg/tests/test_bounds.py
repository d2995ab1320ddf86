"""Bounds module: exact flags, the psi ratio, and CSV output."""

import io
import math

import pytest

from binomlcm import BoundsRecord, DomainError, check_bounds, lcm_range, psi_table
from binomlcm.bounds import BOUNDS_CSV_HEADER, write_bounds_csv
from helpers import brute_range_lcm


class TestCheckBounds:
    def test_n1(self):
        rec = check_bounds(1)
        assert rec.lcm_digits == 1
        assert rec.lower_2nm1_holds  # 2^0 = 1 <= 1
        assert rec.upper_3n_holds  # 1 <= 3
        assert not rec.lower_2n_required

    def test_n9(self):
        assert brute_range_lcm(9) == 2520
        rec = check_bounds(9)
        assert rec.lower_2nm1_holds and rec.lower_2n_holds and rec.upper_3n_holds
        assert rec.lower_2n_required
        assert rec.lcm_digits == 4

    def test_n8_informational_flag_true_but_not_required(self):
        assert brute_range_lcm(8) == 840
        rec = check_bounds(8)
        assert rec.lower_2n_holds  # 840 >= 256, though nothing requires it
        assert not rec.lower_2n_required

    def test_small_n_where_2n_fails_is_still_ok(self):
        rec = check_bounds(2)  # lcm = 2 < 4 = 2^2
        assert not rec.lower_2n_holds
        assert rec.enforced_ok

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            check_bounds(0)

    def test_enforced_ok_semantics(self):
        required_fail = BoundsRecord(9, 4, True, False, True, 0.87)
        informational_fail = BoundsRecord(5, 2, True, False, True, 0.9)
        assert not required_fail.enforced_ok
        assert informational_fail.enforced_ok


class TestPsiTable:
    def test_single_trivial_record(self):
        records = psi_table(1, 1)
        assert len(records) == 1
        assert records[0].n == 1
        assert records[0].psi_over_n == 0.0

    def test_anchor_at_ten(self):
        (rec,) = psi_table(10, 10)
        assert rec.psi_over_n == pytest.approx(math.log(2520) / 10, abs=1e-12)
        assert rec.psi_over_n == pytest.approx(0.7832, abs=1e-3)

    def test_sampling_points(self):
        records = psi_table(50, 12)
        assert [r.n for r in records] == [12, 24, 36, 48]

    def test_matches_per_n_check_bounds(self):
        cumulative = psi_table(60, 1)
        assert [r.n for r in cumulative] == list(range(1, 61))
        for rec in cumulative:
            single = check_bounds(rec.n)
            assert rec.lcm_digits == single.lcm_digits
            assert rec.lower_2nm1_holds == single.lower_2nm1_holds
            assert rec.lower_2n_holds == single.lower_2n_holds
            assert rec.upper_3n_holds == single.upper_3n_holds
            assert rec.psi_over_n == pytest.approx(single.psi_over_n, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            psi_table(0, 1)
        with pytest.raises(DomainError):
            psi_table(10, 0)

    def test_psi_agrees_with_ln_of_expanded_integer(self):
        # Factorization-path psi vs ln of the fold-oracle integer, all
        # n <= 2000, 1e-9 relative.
        records = psi_table(2000, 1)
        running = 1
        for rec in records:
            running = math.lcm(running, rec.n)
            assert rec.psi_over_n == pytest.approx(math.log(running) / rec.n if rec.n > 1 else 0.0, rel=1e-9, abs=1e-12)

    def test_log_value_route_matches(self):
        f = lcm_range(777)
        assert f.log_value() == pytest.approx(math.log(f.expand()), rel=1e-12)


class TestCsv:
    def test_header_and_formatting(self):
        buf = io.StringIO()
        write_bounds_csv(psi_table(10, 5), buf)
        lines = buf.getvalue().strip().splitlines()
        assert lines[0] == ",".join(BOUNDS_CSV_HEADER)
        assert lines[1].startswith("5,2,true,true,true,")  # lcm(1..5) = 60 >= 2^5
        n10 = lines[2].split(",")
        assert n10[:5] == ["10", "4", "true", "true", "true"]
        # 12 significant digits
        assert n10[5] == f"{math.log(2520) / 10:.12g}"
        assert len(n10[5].replace("0.", "")) == 12
