"""Hand-expanded closed forms of low-rank results, frozen as term data.

The published closed forms for the irreducible-stratum polynomials
B(n, r) with n <= 4 and for the full SL(3) / SL(4) character varieties
are kept here as flat lists of terms, each a rational coefficient times
a product of fixed base polynomials raised to exponents affine in
s = r - 1.  They are evaluated per rank and compared against the
pipeline; storing structure instead of strings makes a transcription
slip a localized test failure.

first_coeff_mismatch reports where two polynomials first disagree,
which is the required diagnostic when a golden comparison fails.
"""

from __future__ import annotations

from fractions import Fraction

from .ratpoly import RatPoly

X = RatPoly.x()

_BASES: dict[str, RatPoly] = {
    "x": X,
    "x-1": X - 1,
    "x+1": X + 1,
    "x^2+1": X**2 + 1,
    "x^2+x+1": X**2 + X + 1,
    "x^3+x^2+x+1": X**3 + X**2 + X + 1,
    "x^2+2x+2": X**2 + 2 * X + 2,
}

# A term is (coefficient, ((base, s_mult, const), ...)) meaning
#   coefficient * prod base^(s_mult*s + const).
Term = tuple[Fraction | int, tuple[tuple[str, int, int], ...]]


def evaluate_terms(terms: list[Term], s: int) -> RatPoly:
    """Sum of coefficient * prod base^(s_mult*s + const) at the given s."""
    if s < 0:
        raise ValueError("s must be >= 0")
    total = RatPoly.zero()
    for coeff, powers in terms:
        term = RatPoly.one()
        for base, s_mult, const in powers:
            e = s_mult * s + const
            if e:
                term = term * _BASES[base] ** e
        total = total + term * coeff
    return total


# B(n, r) / (x - 1) for n = 1..4, exponents in s = r - 1.

_B1_QUOTIENT: list[Term] = [
    (1, (("x-1", 1, 0),)),
]

_B2_QUOTIENT: list[Term] = [
    (1, (("x-1", 2, 0), ("x", 1, 0), ("x+1", 1, 0))),
    (-1, (("x-1", 2, 0), ("x", 1, 0))),
    (Fraction(1, 2), (("x-1", 2, 0),)),
    (Fraction(-1, 2), (("x-1", 1, 0), ("x+1", 1, 0))),
]

_B3_QUOTIENT: list[Term] = [
    (Fraction(-1, 3), (("x-1", 1, 0), ("x^2+x+1", 1, 0))),
    (Fraction(1, 3), (("x-1", 3, 0),)),
    (-1, (("x-1", 3, 0), ("x", 1, 0))),
    (1, (("x-1", 3, 0), ("x", 1, 0), ("x+1", 1, 0))),
    (1, (("x-1", 3, 0), ("x", 3, 0))),
    (1, (("x-1", 3, 0), ("x", 3, 0), ("x+1", 1, 0), ("x^2+x+1", 1, 0))),
    (-2, (("x-1", 3, 0), ("x", 3, 0), ("x+1", 1, 0))),
]

_B4_QUOTIENT: list[Term] = [
    (Fraction(1, 4), (("x-1", 4, 0),)),
    (Fraction(-1, 4), (("x-1", 2, 0), ("x+1", 2, 0))),
    (1, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 1, 0))),
    (-1, (("x-1", 3, 0), ("x+1", 2, 0), ("x", 1, 0))),
    (Fraction(1, 2), (("x-1", 2, 0), ("x+1", 2, 0), ("x", 2, 0))),
    (Fraction(-1, 2), (("x-1", 2, 0), ("x+1", 2, 0), ("x", 2, 0), ("x^2+1", 1, 0))),
    (Fraction(1, 2), (("x-1", 4, 0), ("x", 2, 0))),
    (-1, (("x-1", 4, 0), ("x", 2, 0), ("x+1", 1, 0))),
    (Fraction(1, 2), (("x-1", 4, 0), ("x", 2, 0), ("x+1", 2, 0))),
    (1, (("x-1", 4, 0), ("x", 3, 0), ("x+1", 1, 0), ("x^2+x+1", 1, 0))),
    (-2, (("x-1", 4, 0), ("x", 3, 0), ("x+1", 1, 0))),
    (1, (("x-1", 4, 0), ("x", 3, 0))),
    (1, (("x-1", 4, 0), ("x", 6, 0), ("x+1", 1, 0), ("x^2+x+1", 1, 0), ("x^3+x^2+x+1", 1, 0))),
    (-2, (("x-1", 4, 0), ("x", 6, 0), ("x+1", 1, 0), ("x^2+x+1", 1, 0))),
    (-1, (("x-1", 4, 0), ("x", 6, 0), ("x+1", 2, 0))),
    (3, (("x-1", 4, 0), ("x", 6, 0), ("x+1", 1, 0))),
    (-1, (("x-1", 4, 0), ("x", 6, 0))),
]

_B_QUOTIENTS = {1: _B1_QUOTIENT, 2: _B2_QUOTIENT, 3: _B3_QUOTIENT, 4: _B4_QUOTIENT}

# Whole-variety SL(3) polynomial at rank r = s + 1.
_SL3_TOTAL: list[Term] = [
    (Fraction(1, 2), (("x-1", 1, 1), ("x+1", 1, 0), ("x", 0, 1))),
    (Fraction(1, 3), (("x^2+x+1", 1, 0), ("x", 0, 1), ("x+1", 0, 1))),
    (1, (("x-1", 2, 0), ("x+1", 1, 0), ("x", 3, 0), ("x^2+x+1", 1, 0))),
    (1, (("x-1", 2, 0), ("x+1", 1, 0), ("x", 1, 1))),
    (-2, (("x-1", 2, 0), ("x+1", 1, 0), ("x", 3, 0))),
    (1, (("x-1", 2, 0), ("x", 3, 0))),
    (-1, (("x-1", 2, 0), ("x", 1, 1))),
    (Fraction(1, 6), (("x-1", 2, 0), ("x", 0, 1), ("x+1", 0, 1))),
]

# Whole-variety SL(4) polynomial at rank r = s + 1.
_SL4_TOTAL: list[Term] = [
    (Fraction(1, 2), (("x-1", 3, 1), ("x+1", 2, 0), ("x", 2, 0))),
    (1, (("x-1", 3, 1), ("x+1", 1, 0), ("x", 3, 0), ("x^2+x+1", 1, 0))),
    (-2, (("x-1", 3, 1), ("x+1", 1, 0), ("x", 3, 0))),
    (-1, (("x-1", 3, 1), ("x+1", 1, 0), ("x", 2, 0))),
    (Fraction(3, 2), (("x-1", 3, 1), ("x+1", 1, 0), ("x", 1, 0))),
    (1, (("x-1", 3, 1), ("x", 3, 0))),
    (Fraction(1, 2), (("x-1", 3, 1), ("x", 2, 0))),
    (Fraction(-3, 2), (("x-1", 3, 1), ("x", 1, 0))),
    (Fraction(11, 24), (("x-1", 3, 1),)),
    (Fraction(1, 24), (("x-1", 3, 3),)),
    (-1, (("x-1", 3, 0), ("x+1", 2, 0), ("x", 6, 0))),
    (Fraction(1, 2), (("x-1", 3, 0), ("x+1", 2, 0), ("x", 2, 0))),
    (1, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 6, 0), ("x^2+x+1", 1, 0), ("x^3+x^2+x+1", 1, 0))),
    (-2, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 6, 0), ("x^2+x+1", 1, 0))),
    (3, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 6, 0))),
    (1, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 3, 0), ("x^2+x+1", 1, 0))),
    (-2, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 3, 0))),
    (-1, (("x-1", 3, 0), ("x+1", 1, 0), ("x", 2, 0))),
    (Fraction(1, 2), (("x-1", 3, 0), ("x+1", 1, 0), ("x", 1, 0))),
    (-1, (("x-1", 3, 0), ("x", 6, 0))),
    (1, (("x-1", 3, 0), ("x", 3, 0))),
    (Fraction(1, 2), (("x-1", 3, 0), ("x", 2, 0))),
    (Fraction(-1, 2), (("x-1", 3, 0), ("x", 1, 0))),
    (Fraction(1, 2), (("x-1", 3, 0),)),
    (Fraction(1, 4), (("x-1", 3, 3),)),
    (Fraction(-1, 2), (("x-1", 2, 1), ("x+1", 2, 0), ("x", 1, 0))),
    (Fraction(1, 2), (("x-1", 2, 1), ("x+1", 1, 0), ("x", 1, 0))),
    (Fraction(-1, 4), (("x-1", 2, 1), ("x+1", 1, 0))),
    (Fraction(1, 2), (("x-1", 2, 0), ("x+1", 1, 0), ("x", 1, 0))),
    (Fraction(-1, 2), (("x-1", 2, 0), ("x+1", 2, 0), ("x", 1, 0))),
    (Fraction(1, 3), (("x-1", 1, 1), ("x+1", 0, 1), ("x", 0, 1), ("x^2+x+1", 1, 0))),
    (Fraction(1, 8), (("x-1", 1, 1), ("x+1", 2, 0), ("x^2+2x+2", 0, 1))),
    (Fraction(1, 2), (("x-1", 1, 0), ("x+1", 2, 0), ("x", 2, 1), ("x^2+1", 1, 0))),
    (Fraction(-1, 2), (("x-1", 1, 0), ("x+1", 2, 0), ("x", 2, 1))),
    (Fraction(1, 4), (("x-1", 1, 1), ("x+1", 2, 0))),
    (Fraction(-1, 4), (("x+1", 1, 1), ("x^2+1", 1, 0))),
    (Fraction(1, 4), (("x^3+x^2+x+1", 1, 1),)),
]


def golden_b_quotient(n: int, s: int) -> RatPoly:
    """B(n, s+1)/(x-1) from the frozen closed form; n in 1..4."""
    if n not in _B_QUOTIENTS:
        raise ValueError(f"no frozen closed form for n={n}")
    return evaluate_terms(_B_QUOTIENTS[n], s)


def golden_b_poly(n: int, s: int) -> RatPoly:
    """B(n, s+1) from the frozen closed form; n in 1..4."""
    return golden_b_quotient(n, s) * (X - 1)


def golden_sl3(s: int) -> RatPoly:
    """Whole-variety SL(3) polynomial at rank s+1 from the frozen form."""
    return evaluate_terms(_SL3_TOTAL, s)


def golden_sl4(s: int) -> RatPoly:
    """Whole-variety SL(4) polynomial at rank s+1 from the frozen form."""
    return evaluate_terms(_SL4_TOTAL, s)


def first_coeff_mismatch(
    a: RatPoly, b: RatPoly
) -> tuple[int, Fraction, Fraction] | None:
    """Lowest degree where a and b differ, with both values; None if equal."""
    top = max(a.degree, b.degree)
    for i in range(top + 1):
        if a.coefficient(i) != b.coefficient(i):
            return i, a.coefficient(i), b.coefficient(i)
    return None
