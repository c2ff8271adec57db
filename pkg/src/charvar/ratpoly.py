"""Exact univariate polynomials over the rationals.

The whole pipeline works in Q[x]: E-polynomials, the inverted series
coefficients and every intermediate value are instances of
:class:`RatPoly`.  Coefficients are `fractions.Fraction` values, dense in
ascending degree, so index ``i`` holds the coefficient of ``x**i``.
Floating point never appears; the final answers are integer polynomials
reached through rational intermediates, and any rounding would be a
correctness bug.

>>> p = RatPoly([-1, 0, 1])          # x^2 - 1
>>> q = p.exact_div(RatPoly([-1, 1]))
>>> str(q)
'x + 1'
>>> q(3)
Fraction(4, 1)
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from .errors import NotDivisibleError

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _int_form(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    """Common-denominator view (numerators, denominator) of a coefficient list."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class RatPoly:
    """Dense polynomial in Q[x]; immutable, usable as a dict key.

    The highest stored coefficient is nonzero; the zero polynomial
    stores an empty tuple.  Fractions are kept in lowest terms with a
    positive denominator (the Fraction type guarantees this).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> RatPoly:
        return cls()

    @classmethod
    def one(cls) -> RatPoly:
        return cls([1])

    @classmethod
    def x(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Scalar) -> RatPoly:
        return cls([c])

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> RatPoly:
        """c * x^k."""
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return cls([0] * exponent + [coefficient])

    # -- structure ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Ascending coefficients; empty for the zero polynomial."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coeffs)

    def int_coeffs(self) -> list[int]:
        """Ascending integer coefficients; raises if any is fractional."""
        if not self.is_integral():
            raise ValueError(f"polynomial has non-integer coefficients: {self!r}")
        return [c.numerator for c in self._coeffs]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: RatPoly | Scalar) -> RatPoly:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly([-c for c in self._coeffs])

    def __sub__(self, other: RatPoly | Scalar) -> RatPoly:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> RatPoly:
        return RatPoly.constant(other) + (-self)

    def __mul__(self, other: RatPoly | Scalar) -> RatPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatPoly()
            return RatPoly([c * other for c in self._coeffs])
        if not isinstance(other, RatPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return RatPoly()
        # Schoolbook convolution on common-denominator integer vectors:
        # plain int arithmetic avoids a gcd per intermediate product.
        na, da = _int_form(self._coeffs)
        nb, db = _int_form(other._coeffs)
        out = [0] * (len(na) + len(nb) - 1)
        for i, ai in enumerate(na):
            if ai:
                for j, bj in enumerate(nb):
                    out[i + j] += ai * bj
        den = da * db
        return RatPoly([Fraction(v, den) for v in out])

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> RatPoly:
        c = _as_fraction(scalar)
        if not c:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return RatPoly([v / c for v in self._coeffs])

    def __pow__(self, exponent: int) -> RatPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = RatPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- division -----------------------------------------------------

    def __divmod__(self, den: RatPoly) -> tuple[RatPoly, RatPoly]:
        if not isinstance(den, RatPoly):
            return NotImplemented
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dc = den._coeffs
        dn = len(dc)
        lead_inv = 1 / dc[-1]
        q = [Fraction(0)] * max(len(rem) - dn + 1, 0)
        for i in range(len(rem) - dn, -1, -1):
            factor = rem[i + dn - 1] * lead_inv
            if factor:
                q[i] = factor
                for j, c in enumerate(dc):
                    rem[i + j] -= factor * c
        return RatPoly(q), RatPoly(rem[: dn - 1])

    def exact_div(self, den: RatPoly) -> RatPoly:
        """Quotient q with q*den == self; raises NotDivisibleError otherwise."""
        q, rem = divmod(self, den)
        if not rem.is_zero():
            raise NotDivisibleError(
                f"({self}) is not divisible by ({den}); remainder {rem}"
            )
        return q

    # -- evaluation and substitution ----------------------------------

    def substitute_power(self, h: int) -> RatPoly:
        """p(x^h); spreads coefficient i to position i*h."""
        if h < 1:
            raise ValueError("substitution power must be >= 1")
        if h == 1 or not self._coeffs:
            return self
        out = [Fraction(0)] * ((len(self._coeffs) - 1) * h + 1)
        for i, c in enumerate(self._coeffs):
            out[i * h] = c
        return RatPoly(out)

    def __call__(self, v: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        v = _as_fraction(v)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    # -- comparison and formatting ------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        """Human form, descending powers: 'x^5 - 3x^4 + ... + 2x - 1'."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mag.denominator == 1:
                body = str(mag.numerator)
            else:
                body = f"({mag})"
            if i > 0:
                var = "x" if i == 1 else f"x^{i}"
                body = var if body == "1" else body + var
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)
