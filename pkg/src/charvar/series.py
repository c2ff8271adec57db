"""Truncated formal power series in t with polynomial coefficients.

A :class:`TruncSeries` tracks the coefficients of t^0 .. t^N for a fixed
truncation order N chosen by the caller (typically the largest matrix
size requested).  Coefficients live in Q[x] as :class:`RatPoly` values.
Series of different orders never combine; mixing them raises
:class:`OrderMismatchError` instead of silently re-truncating, so a
caller bug cannot masquerade as a shorter expansion.

Provides the Cauchy product, reciprocal, formal log/exp and the weight
shift that multiplies the t^n coefficient by x^((r-1)*n*(n-1)/2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import NonUnitConstantTermError, NonZeroConstantTermError, OrderMismatchError
from .ratpoly import RatPoly

CoeffLike = Union[RatPoly, int, Fraction]


def _as_poly(c: CoeffLike) -> RatPoly:
    if isinstance(c, RatPoly):
        return c
    return RatPoly.constant(c)


class TruncSeries:
    """Series sum_{k=0..order} c_k(x) t^k; immutable."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[CoeffLike] = ()):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        cs = [_as_poly(c) for c in coeffs][: order + 1]
        cs.extend([RatPoly.zero()] * (order + 1 - len(cs)))
        self._order = order
        self._coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls(order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls(order, [1])

    @classmethod
    def t(cls, order: int) -> TruncSeries:
        return cls(order, [0, 1])

    # -- structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[RatPoly, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> RatPoly:
        if not 0 <= k <= self._order:
            raise IndexError(f"coefficient index {k} outside tracked range 0..{self._order}")
        return self._coeffs[k]

    def _check_order(self, other: TruncSeries) -> None:
        if self._order != other._order:
            raise OrderMismatchError(
                f"series orders differ: {self._order} vs {other._order}"
            )

    # -- ring operations ----------------------------------------------

    def __add__(self, other: TruncSeries) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        return TruncSeries(
            self._order, [a + b for a, b in zip(self._coeffs, other._coeffs)]
        )

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self._order, [-c for c in self._coeffs])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        return TruncSeries(
            self._order, [a - b for a, b in zip(self._coeffs, other._coeffs)]
        )

    def __mul__(self, other: TruncSeries | CoeffLike) -> TruncSeries:
        if isinstance(other, (RatPoly, int, Fraction)):
            p = _as_poly(other)
            return TruncSeries(self._order, [c * p for c in self._coeffs])
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        n = self._order
        out = [RatPoly.zero()] * (n + 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    # -- series-specific operations -----------------------------------

    def invert(self) -> TruncSeries:
        """Reciprocal series: self * result = 1 up to the tracked order.

        Needs constant term 1; coefficients follow the convolution
        recursion b_n = -sum_{k=1..n} a_k b_{n-k} with b_0 = 1.
        """
        if self._coeffs[0] != RatPoly.one():
            raise NonUnitConstantTermError(
                f"reciprocal needs constant term 1, got {self._coeffs[0]}"
            )
        a = self._coeffs
        b: list[RatPoly] = [RatPoly.one()]
        for n in range(1, self._order + 1):
            acc = RatPoly.zero()
            for k in range(1, n + 1):
                if not a[k].is_zero():
                    acc = acc + a[k] * b[n - k]
            b.append(-acc)
        return TruncSeries(self._order, b)

    def log(self) -> TruncSeries:
        """Formal log of a series with constant term 1."""
        if self._coeffs[0] != RatPoly.one():
            raise NonUnitConstantTermError(
                f"log needs constant term 1, got {self._coeffs[0]}"
            )
        z = self - TruncSeries.one(self._order)
        # log(1+z) = z - z^2/2 + z^3/3 - ...; z^m has t-order >= m.
        out = TruncSeries.zero(self._order)
        power = TruncSeries.one(self._order)
        for m in range(1, self._order + 1):
            power = power * z
            out = out + power * Fraction((-1) ** (m + 1), m)
        return out

    def exp(self) -> TruncSeries:
        """Formal exp of a series with constant term 0."""
        if not self._coeffs[0].is_zero():
            raise NonZeroConstantTermError(
                f"exp needs constant term 0, got {self._coeffs[0]}"
            )
        out = TruncSeries.one(self._order)
        term = TruncSeries.one(self._order)
        for m in range(1, self._order + 1):
            term = term * self * Fraction(1, m)
            out = out + term
        return out

    def shift(self, r: int) -> TruncSeries:
        """Multiply the t^n coefficient by x^((r-1)*n*(n-1)/2)."""
        if r < 1:
            raise ValueError("rank r must be >= 1")
        if r == 1:
            return self
        out = []
        for n, c in enumerate(self._coeffs):
            e = (r - 1) * n * (n - 1) // 2
            out.append(c * RatPoly.monomial(e) if e else c)
        return TruncSeries(self._order, out)

    # -- formatting ---------------------------------------------------

    def __repr__(self) -> str:
        parts = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            term = f"({c})" if k else f"{c}"
            if k == 1:
                term += "*t"
            elif k > 1:
                term += f"*t^{k}"
            parts.append(term)
        body = " + ".join(parts) if parts else "0"
        return f"TruncSeries(order={self._order}: {body})"
