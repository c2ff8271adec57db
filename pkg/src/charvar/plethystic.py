"""Adams operations, plethystic exp/log and small arithmetic functions.

The Adams operation acts on a monomial x^i t^k by summing scaled power
substitutions: adams sends it to sum_l x^(l*i) t^(l*k) / l, and its
inverse weights the same substitutions by moebius(l)/l.  Composing with
the formal exp/log of the series module gives the plethystic pair

    pexp(f) = exp(adams(f))        (constant term of f must be 0)
    plog(f) = adams_inverse(log f) (constant term of f must be 1)

plog_closed computes the same logarithm through an explicit sum over
partitions of the divisors of each exponent; it shares no code with the
operator route and exists to cross-check it.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import NonUnitConstantTermError, NonZeroConstantTermError
from .partitions import enumerate_partitions, multinomial
from .ratpoly import RatPoly
from .series import TruncSeries


class ArithCache:
    """Memoized moebius / totient / divisors via trial division.

    Reads are lock-free; insertions take a lock so concurrent callers
    never observe a half-built entry.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._factors: dict[int, tuple[tuple[int, int], ...]] = {}
        self._moebius: dict[int, int] = {}
        self._totient: dict[int, int] = {}
        self._divisors: dict[int, tuple[int, ...]] = {}

    def factorize(self, n: int) -> tuple[tuple[int, int], ...]:
        """Ascending (prime, exponent) pairs; empty for n = 1."""
        if n < 1:
            raise ValueError("n must be >= 1")
        cached = self._factors.get(n)
        if cached is not None:
            return cached
        m = n
        out: list[tuple[int, int]] = []
        p = 2
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                out.append((p, e))
            p += 1 if p == 2 else 2
        if m > 1:
            out.append((m, 1))
        result = tuple(out)
        with self._lock:
            self._factors[n] = result
        return result

    def moebius(self, n: int) -> int:
        cached = self._moebius.get(n)
        if cached is not None:
            return cached
        factors = self.factorize(n)
        if any(e > 1 for _, e in factors):
            value = 0
        else:
            value = -1 if len(factors) % 2 else 1
        with self._lock:
            self._moebius[n] = value
        return value

    def totient(self, n: int) -> int:
        cached = self._totient.get(n)
        if cached is not None:
            return cached
        value = n
        for p, _ in self.factorize(n):
            value = value // p * (p - 1)
        with self._lock:
            self._totient[n] = value
        return value

    def divisors(self, n: int) -> tuple[int, ...]:
        cached = self._divisors.get(n)
        if cached is not None:
            return cached
        ds = [1]
        for p, e in self.factorize(n):
            ds = [d * p**i for d in ds for i in range(e + 1)]
        result = tuple(sorted(ds))
        with self._lock:
            self._divisors[n] = result
        return result


_CACHE = ArithCache()


def moebius(n: int) -> int:
    """0 unless n is squarefree, else (-1)^(number of prime factors)."""
    return _CACHE.moebius(n)


def totient(n: int) -> int:
    """Count of 1..n coprime to n."""
    return _CACHE.totient(n)


def divisors(n: int) -> tuple[int, ...]:
    """Ascending divisors of n."""
    return _CACHE.divisors(n)


def _power_substitution_sum(f: TruncSeries, weight) -> TruncSeries:
    """sum_l weight(l) * f(x^l, t^l), truncated at f.order."""
    if not f.coefficient(0).is_zero():
        raise NonZeroConstantTermError(
            f"constant term must be 0, got {f.coefficient(0)}"
        )
    order = f.order
    out = [RatPoly.zero()] * (order + 1)
    for l in range(1, order + 1):
        w = weight(l)
        if not w:
            continue
        for k in range(1, order // l + 1):
            fk = f.coefficient(k)
            if not fk.is_zero():
                out[l * k] = out[l * k] + fk.substitute_power(l) * w
    return TruncSeries(order, out)


def adams(f: TruncSeries) -> TruncSeries:
    """sum_l f(x^l, t^l)/l for a series with zero constant term."""
    return _power_substitution_sum(f, lambda l: Fraction(1, l))


def adams_inverse(f: TruncSeries) -> TruncSeries:
    """sum_l moebius(l) f(x^l, t^l)/l; inverts adams up to truncation."""
    return _power_substitution_sum(f, lambda l: Fraction(moebius(l), l))


def pexp(f: TruncSeries) -> TruncSeries:
    """Plethystic exponential exp(adams(f))."""
    return adams(f).exp()


def plog(f: TruncSeries) -> TruncSeries:
    """Plethystic logarithm adams_inverse(log(f)); inverse of pexp."""
    if f.coefficient(0) != RatPoly.one():
        raise NonUnitConstantTermError(
            f"plog needs constant term 1, got {f.coefficient(0)}"
        )
    return adams_inverse(f.log())


def plog_closed(f: TruncSeries) -> TruncSeries:
    """plog by direct combinatorics, no series log involved.

    The t^n coefficient is assembled from each divisor d of n: writing
    l = n/d, every partition of d with multiplicities (k_1, ..., k_d)
    and length m = sum k_j contributes

        (moebius(l)/l) * ((-1)^(m-1)/m) * (m choose k_1..k_d)
            * prod_j f_j(x^l)^(k_j)

    where f_j is the t^j coefficient of f.
    """
    if f.coefficient(0) != RatPoly.one():
        raise NonUnitConstantTermError(
            f"plog needs constant term 1, got {f.coefficient(0)}"
        )
    order = f.order
    out = [RatPoly.zero()]
    for n in range(1, order + 1):
        acc = RatPoly.zero()
        for d in divisors(n):
            l = n // d
            mu = moebius(l)
            if mu == 0:
                continue
            inner = RatPoly.zero()
            for part in enumerate_partitions(d):
                m = part.length
                term = RatPoly.one()
                for j, kj in enumerate(part.mult, start=1):
                    if kj == 0:
                        continue
                    fj = f.coefficient(j)
                    if fj.is_zero():
                        term = RatPoly.zero()
                        break
                    term = term * fj.substitute_power(l) ** kj
                if term.is_zero():
                    continue
                weight = Fraction((-1) ** (m - 1) * multinomial(part.mult), m)
                inner = inner + term * weight
            acc = acc + inner * Fraction(mu, l)
        out.append(acc)
    return TruncSeries(order, out)
