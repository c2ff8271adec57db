"""E-polynomials of free-group character varieties and their strata.

For the free group of rank r and the groups GL(n), SL(n), PGL(n), the
variety of representations up to conjugation splits into polystable
strata labelled by partitions of n.  The stratum polynomials are built
from the family B(n, r) of E-polynomials of the irreducible loci:

  1. a(n) = ((x-1)(x^2-1)...(x^n-1))^(r-1) are the coefficients of a
     series in t whose reciprocal has coefficients b(n);
  2. the t^n coefficient of the reciprocal is weighted by
     x^((r-1)*n*(n-1)/2), the plethystic log is taken, and the result
     is scaled by (1-x), giving B(n, r);
  3. a stratum labelled by the partition m sums, over all rectangle
     multisets gluing to m, the products of B(l, r)(x^h) weighted by
     1 / (k! * h^k) per rectangle cell.

Two independent routes to B(n, r) are kept: a truncated-series pipeline
(production, cached) and a direct divisor/partition sum; their equality
is a primary self-check.  SL and PGL polynomials are the GL ones divided
exactly by (x-1)^r; a nonzero remainder would mean a pipeline bug and
raises NotDivisibleError.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .errors import CharvarError, InvalidQueryError
from .partitions import Partition, enumerate_partitions, enumerate_rect_partitions, fiber, multinomial
from .plethystic import divisors, moebius, plog
from .ratpoly import RatPoly
from .series import TruncSeries


class GroupKind(str, Enum):
    GL = "gl"
    SL = "sl"
    PGL = "pgl"


@dataclass(frozen=True)
class StratumQuery:
    """One computation request: group family, size n, rank r, optional stratum.

    stratum None means the whole character variety.
    """

    group: GroupKind
    n: int
    r: int
    stratum: Partition | None = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidQueryError("n must be >= 1")
        if self.r < 1:
            raise InvalidQueryError("rank r must be >= 1")
        if self.stratum is not None and self.stratum.n != self.n:
            raise InvalidQueryError(
                f"stratum partitions {self.stratum.n}, expected {self.n}"
            )


def _a_coeffs(n_max: int, r: int) -> list[RatPoly]:
    """a(0..n_max) with a(n) = (prod_{i=1..n} (x^i - 1))^(r-1)."""
    out = [RatPoly.one()]
    prod = RatPoly.one()
    for i in range(1, n_max + 1):
        prod = prod * (RatPoly.monomial(i) - 1)
        out.append(prod**(r - 1))
    return out


def _b_coeffs(n_max: int, r: int) -> list[RatPoly]:
    """Reciprocal-series coefficients b(0..n_max): sum a(k) b(n-k) = 0 for n >= 1."""
    a = _a_coeffs(n_max, r)
    b = [RatPoly.one()]
    for n in range(1, n_max + 1):
        acc = RatPoly.zero()
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k]
        b.append(-acc)
    return b


def b_poly_series(n_max: int, r: int) -> list[RatPoly]:
    """[B(1,r), ..., B(n_max,r)] via the truncated-series pipeline."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if r < 1:
        raise ValueError("rank r must be >= 1")
    f = TruncSeries(n_max, _a_coeffs(n_max, r))
    shifted = f.invert().shift(r)
    logged = plog(shifted) * (RatPoly.one() - RatPoly.x())
    return [logged.coefficient(n) for n in range(1, n_max + 1)]


def b_poly_closed(n: int, r: int) -> RatPoly:
    """B(n, r) by the direct divisor/partition sum; no series operations.

    For each divisor d of n with cofactor l = n/d, every partition of d
    with multiplicities (k_1..k_d) and length m contributes

      (moebius(l)/l) * ((-1)^m / m) * (m choose k_1..k_d)
        * prod_j [ b_j(x^l) * x^(l*(r-1)*j*(j-1)/2) ]^(k_j)

    and the total is scaled by (x - 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 1:
        raise ValueError("rank r must be >= 1")
    b = _b_coeffs(n, r)
    total = RatPoly.zero()
    for d in divisors(n):
        l = n // d
        mu = moebius(l)
        if mu == 0:
            continue
        for part in enumerate_partitions(d):
            m = part.length
            term = RatPoly.one()
            for j, kj in enumerate(part.mult, start=1):
                if kj == 0:
                    continue
                factor = b[j].substitute_power(l)
                shift = l * (r - 1) * (j * (j - 1) // 2)
                if shift:
                    factor = factor * RatPoly.monomial(shift)
                term = term * factor**kj
            weight = Fraction(mu * (-1) ** m * multinomial(part.mult), l * m)
            total = total + term * weight
    return total * (RatPoly.x() - 1)


class BPolyCache:
    """Shared memo for B(n, r) and its power substitutions B(n, r)(x^h).

    The stratum formula reuses the same few polynomials across hundreds
    of rectangle terms; lookups are lock-free, inserts synchronized.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._base: dict[tuple[int, int], RatPoly] = {}
        self._powers: dict[tuple[int, int, int], RatPoly] = {}

    def b_poly(self, n: int, r: int) -> RatPoly:
        cached = self._base.get((n, r))
        if cached is not None:
            return cached
        values = b_poly_series(n, r)
        with self._lock:
            for i, v in enumerate(values, start=1):
                self._base.setdefault((i, r), v)
        return values[n - 1]

    def b_power(self, n: int, r: int, h: int) -> RatPoly:
        if h == 1:
            return self.b_poly(n, r)
        cached = self._powers.get((n, r, h))
        if cached is not None:
            return cached
        value = self.b_poly(n, r).substitute_power(h)
        with self._lock:
            self._powers.setdefault((n, r, h), value)
        return value


_CACHE = BPolyCache()


def b_poly(n: int, r: int) -> RatPoly:
    """E-polynomial of the irreducible stratum of the GL(n) variety (cached)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 1:
        raise ValueError("rank r must be >= 1")
    return _CACHE.b_poly(n, r)


def _rect_term(rp, r: int) -> RatPoly:
    """prod over cells of B(l, r)(x^h)^k / (k! * h^k)."""
    term = RatPoly.one()
    scale = 1
    for (l, h), k in rp.blocks:
        term = term * _CACHE.b_power(l, r, h) ** k
        scale *= factorial(k) * h**k
    return term * Fraction(1, scale)


def e_gl_stratum(n: int, r: int, m: Partition) -> RatPoly:
    """E-polynomial of the GL(n) stratum labelled by the partition m."""
    if m.n != n:
        raise ValueError(f"stratum partitions {m.n}, expected {n}")
    total = RatPoly.zero()
    for rp in fiber(m):
        total = total + _rect_term(rp, r)
    return total


def e_gl_total(n: int, r: int) -> RatPoly:
    """E-polynomial of the whole GL(n) variety: sum over all rectangle multisets."""
    total = RatPoly.zero()
    for rp in enumerate_rect_partitions(n):
        total = total + _rect_term(rp, r)
    return total


def e_gl_total_by_pexp(n_max: int, r: int) -> list[RatPoly]:
    """Whole-variety polynomials for n = 1..n_max via pexp of the B series.

    Independent of the rectangle-multiset sum; used as a consistency
    check between the two generating-function identities.
    """
    from .plethystic import pexp

    bs = TruncSeries(n_max, [RatPoly.zero()] + b_poly_series(n_max, r))
    total = pexp(bs)
    return [total.coefficient(n) for n in range(1, n_max + 1)]


def e_group(query: StratumQuery) -> RatPoly:
    """E-polynomial for the query; SL/PGL divide the GL result by (x-1)^r."""
    if query.stratum is None:
        gl = e_gl_total(query.n, query.r)
    else:
        gl = e_gl_stratum(query.n, query.r, query.stratum)
    if query.group is GroupKind.GL:
        result = gl
    else:
        result = gl.exact_div((RatPoly.x() - 1) ** query.r)
    if not result.is_integral():
        raise CharvarError(
            f"pipeline produced non-integer coefficients for {query}: {result!r}"
        )
    return result


def e_polynomial(query: StratumQuery) -> RatPoly:
    """Alias for e_group; the package-level entry point."""
    return e_group(query)


def euler_char(query: StratumQuery) -> int:
    """Compactly supported Euler characteristic: the E-polynomial at x = 1.

    SL/PGL divide by (x-1)^r symbolically before evaluating, so the
    result is meaningful even though the GL value always vanishes.
    """
    value = e_group(query)(1)
    if value.denominator != 1:
        raise CharvarError(f"non-integer Euler characteristic for {query}: {value}")
    return value.numerator
