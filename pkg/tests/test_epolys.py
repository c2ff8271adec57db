"""Pipeline tests: irreducible-stratum polynomials, strata, groups, Euler."""

from fractions import Fraction

import pytest

from charvar.epolys import (
    GroupKind,
    StratumQuery,
    b_poly,
    b_poly_closed,
    b_poly_series,
    e_gl_stratum,
    e_gl_total,
    e_gl_total_by_pexp,
    e_group,
    e_polynomial,
    euler_char,
)
from charvar.errors import CharvarError
from charvar.partitions import enumerate_partitions, parse_partition
from charvar.plethystic import totient
from charvar.ratpoly import RatPoly

X = RatPoly.x()


class TestBPoly:
    def test_n1_is_power_of_x_minus_one(self):
        for r in range(1, 6):
            assert b_poly(1, r) == (X - 1) ** r

    def test_frozen_b22(self):
        assert b_poly(2, 2).coeffs == (-1, 2, -2, 3, -3, 1)

    def test_rank_one_degenerates_to_zero(self):
        for n in range(2, 6):
            assert b_poly(n, 1).is_zero()

    @pytest.mark.parametrize("r", [2, 3])
    def test_degree_leading_and_root_at_one(self, r):
        for n in range(1, 6):
            poly = b_poly(n, r)
            assert poly.degree == n * n * (r - 1) + 1
            assert poly.leading_coefficient == 1
            assert poly(1) == 0

    def test_both_routes_agree(self):
        series = b_poly_series(5, 3)
        for n in range(1, 6):
            assert b_poly_closed(n, 3) == series[n - 1]

    def test_cache_returns_same_object(self):
        assert b_poly(3, 2) is b_poly(3, 2)

    def test_integral_coefficients(self):
        for n in range(1, 6):
            assert b_poly(n, 2).is_integral()


class TestStrata:
    @pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (4, 2), (3, 3)])
    def test_strata_sum_to_total(self, n, r):
        total = sum(
            (e_gl_stratum(n, r, m) for m in enumerate_partitions(n)),
            RatPoly.zero(),
        )
        assert total == e_gl_total(n, r)

    def test_total_matches_pexp_route(self):
        direct = [e_gl_total(n, 2) for n in range(1, 6)]
        assert direct == e_gl_total_by_pexp(5, 2)

    def test_full_partition_stratum_has_rational_intermediate(self):
        # [1^2] at r=2 involves B(1,2)(x^2)/2 plus B(1,2)^2/2; the sum
        # must come out integral even though each summand alone is not.
        m = parse_partition("1^2", 2)
        stratum = e_gl_stratum(2, 2, m)
        assert stratum.is_integral()
        assert stratum == (X**2 + 1) * (X - 1) ** 2

    def test_irreducible_stratum_is_b_poly(self):
        m = parse_partition("3", 3)
        assert e_gl_stratum(3, 2, m) == b_poly(3, 2)


class TestGroups:
    def test_sl2_r2_total(self):
        assert e_group(StratumQuery(GroupKind.SL, 2, 2)) == X**3

    def test_sl2_r2_strata(self):
        top = StratumQuery(GroupKind.SL, 2, 2, parse_partition("2", 2))
        diag = StratumQuery(GroupKind.SL, 2, 2, parse_partition("1^2", 2))
        assert e_group(top) == X**3 - X**2 - 1
        assert e_group(diag) == X**2 + 1

    def test_gl1_total(self):
        for r in (1, 2, 3):
            assert e_group(StratumQuery(GroupKind.GL, 1, r)) == (X - 1) ** r

    def test_sl_equals_pgl(self):
        for n, r in [(2, 2), (3, 2), (2, 3)]:
            for m in [None, *enumerate_partitions(n)]:
                sl = e_group(StratumQuery(GroupKind.SL, n, r, m))
                pgl = e_group(StratumQuery(GroupKind.PGL, n, r, m))
                assert sl == pgl

    def test_sl_times_divisor_recovers_gl(self):
        for n, r in [(2, 2), (3, 2), (3, 3)]:
            sl = e_group(StratumQuery(GroupKind.SL, n, r))
            assert sl * (X - 1) ** r == e_gl_total(n, r)

    def test_rank_one_accepted(self):
        assert e_group(StratumQuery(GroupKind.SL, 2, 1)) == X

    def test_alias(self):
        query = StratumQuery(GroupKind.SL, 2, 2)
        assert e_polynomial(query) == e_group(query)


class TestQueryValidation:
    def test_rejects_nonpositive_n(self):
        with pytest.raises(CharvarError):
            StratumQuery(GroupKind.GL, 0, 2)

    def test_rejects_nonpositive_r(self):
        with pytest.raises(CharvarError):
            StratumQuery(GroupKind.GL, 2, 0)

    def test_rejects_stratum_of_wrong_size(self):
        m = parse_partition("2", 2)
        with pytest.raises(CharvarError):
            StratumQuery(GroupKind.GL, 3, 2, m)


class TestEuler:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    @pytest.mark.parametrize("r", [2, 3])
    def test_sl_total(self, n, r):
        assert euler_char(StratumQuery(GroupKind.SL, n, r)) == totient(n) * n ** (
            r - 2
        )

    def test_gl_vanishes(self):
        for n in (1, 2, 3):
            assert euler_char(StratumQuery(GroupKind.GL, n, 2)) == 0
            for m in enumerate_partitions(n):
                assert euler_char(StratumQuery(GroupKind.GL, n, 2, m)) == 0

    def test_non_square_stratum_vanishes(self):
        m = parse_partition("1 2", 3)
        assert euler_char(StratumQuery(GroupKind.SL, 3, 2, m)) == 0

    def test_returns_plain_int(self):
        value = euler_char(StratumQuery(GroupKind.SL, 3, 2))
        assert isinstance(value, int) and not isinstance(value, Fraction)
