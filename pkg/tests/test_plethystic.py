"""Adams operations, pexp/plog pair, and the partition-sum logarithm."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charvar.errors import NonUnitConstantTermError, NonZeroConstantTermError
from charvar.partitions import enumerate_partitions
from charvar.plethystic import (
    adams,
    adams_inverse,
    divisors,
    moebius,
    pexp,
    plog,
    plog_closed,
    totient,
)
from charvar.ratpoly import RatPoly
from charvar.series import TruncSeries

X = RatPoly.x()


def series(order, *coeffs):
    return TruncSeries(order, coeffs)


int_polys = st.lists(
    st.integers(min_value=-9, max_value=9), max_size=4
).map(RatPoly)


def zero_head_series(order):
    return st.tuples(*([int_polys] * order)).map(
        lambda cs: TruncSeries(order, (RatPoly.zero(),) + cs)
    )


def unit_head_series(order):
    return st.tuples(*([int_polys] * order)).map(
        lambda cs: TruncSeries(order, (RatPoly.one(),) + cs)
    )


class TestArithmeticFunctions:
    def test_moebius_small(self):
        assert [moebius(n) for n in range(1, 13)] == [
            1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0,
        ]

    def test_totient_small(self):
        assert [totient(n) for n in range(1, 10)] == [1, 1, 2, 2, 4, 2, 6, 4, 6]

    def test_divisors(self):
        assert divisors(1) == (1,)
        assert divisors(12) == (1, 2, 3, 4, 6, 12)
        assert divisors(7) == (1, 7)

    @pytest.mark.parametrize("n", range(1, 60))
    def test_totient_by_moebius_divisor_sum(self, n):
        assert totient(n) == sum((n // d) * moebius(d) for d in divisors(n))

    @pytest.mark.parametrize("n", range(2, 60))
    def test_moebius_divisor_sum_vanishes(self, n):
        assert sum(moebius(d) for d in divisors(n)) == 0


class TestAdams:
    def test_monomial_x_t(self):
        got = adams(series(3, 0, X))
        assert got == series(3, 0, X, X**2 * Fraction(1, 2), X**3 * Fraction(1, 3))

    def test_monomial_t(self):
        assert adams(TruncSeries.t(3)) == series(
            3, 0, 1, Fraction(1, 2), Fraction(1, 3)
        )

    def test_inverse_of_adams_t(self):
        assert adams_inverse(
            series(3, 0, 1, Fraction(1, 2), Fraction(1, 3))
        ) == TruncSeries.t(3)

    def test_inverse_coefficient_rule(self):
        # coefficient of t^2 of the inverse applied to c*t is -c/2
        c = RatPoly.constant(7)
        got = adams_inverse(series(2, 0, c))
        assert got.coefficient(2) == RatPoly.constant(Fraction(-7, 2))

    def test_constant_term_rejected(self):
        with pytest.raises(NonZeroConstantTermError):
            adams(TruncSeries.one(3))
        with pytest.raises(NonZeroConstantTermError):
            adams_inverse(TruncSeries.one(3))


class TestPexp:
    def test_pexp_t_is_geometric(self):
        assert pexp(TruncSeries.t(6)) == TruncSeries(6, [1] * 7)

    def test_pexp_of_all_ones_counts_partitions(self):
        f = TruncSeries(8, [0] + [1] * 8)
        got = pexp(f)
        for n in range(1, 9):
            assert got.coefficient(n) == RatPoly.constant(
                len(enumerate_partitions(n))
            )

    def test_pexp_x_t(self):
        got = pexp(series(5, 0, X))
        assert got == TruncSeries(5, [X**k for k in range(6)])


class TestPlog:
    def test_plog_geometric_is_t(self):
        geometric = TruncSeries(6, [1] * 7)
        assert plog(geometric) == TruncSeries.t(6)

    def test_plog_one_minus_t(self):
        assert plog(series(4, 1, -1)) == series(4, 0, -1)

    def test_unit_constant_required(self):
        with pytest.raises(NonUnitConstantTermError):
            plog(TruncSeries.t(3))
        with pytest.raises(NonUnitConstantTermError):
            plog_closed(TruncSeries.t(3))

    def test_closed_form_matches_on_geometric(self):
        geometric = TruncSeries(6, [1] * 7)
        assert plog_closed(geometric) == TruncSeries.t(6)


@settings(max_examples=50, deadline=None)
@given(zero_head_series(8))
def test_adams_round_trip(f):
    assert adams_inverse(adams(f)) == f
    assert adams(adams_inverse(f)) == f


@settings(max_examples=50, deadline=None)
@given(zero_head_series(8))
def test_pexp_plog_round_trip(f):
    assert plog(pexp(f)) == f


@settings(max_examples=50, deadline=None)
@given(zero_head_series(6), zero_head_series(6))
def test_pexp_turns_sums_into_products(f, g):
    assert pexp(f + g) == pexp(f) * pexp(g)


@settings(max_examples=50, deadline=None)
@given(unit_head_series(8))
def test_plog_routes_agree(f):
    assert plog(f) == plog_closed(f)
