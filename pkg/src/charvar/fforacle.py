"""Brute-force verification over small finite fields.

The symbolic pipeline predicts that the number of conjugation classes
of absolutely irreducible r-tuples in GL(n, F_q) equals B(n, r) at
x = q.  This module checks that claim by exhaustive enumeration: build
the field from tables, list all invertible matrices, test every r-tuple
with a Burnside span closure, and divide the raw count by |PGL(n, F_q)|
(the action on absolutely irreducible tuples is free, so the division
must be exact).

Everything here is deliberately independent of the polynomial code: no
series, no partitions, only table arithmetic, so that agreement between
the two sides is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NonIntegerOrbitCountError, TooLargeError

MAX_MATRIX_ENUM = 10**7
MAX_TUPLE_ENUM = 10**7
MAX_FIELD_SIZE = 9

# residue-ring moduli for the non-prime sizes, ascending coefficients
_IRREDUCIBLE = {
    4: (2, (1, 1, 1)),  # y^2 + y + 1 over GF(2)
    8: (2, (1, 1, 0, 1)),  # y^3 + y + 1 over GF(2)
    9: (3, (1, 0, 1)),  # y^2 + 1 over GF(3)
}

Matrix = tuple[tuple[int, ...], ...]


class PrimeField:
    """Field with q <= 9 elements, encoded 0..q-1, arithmetic by table.

    Prime sizes use integers mod p.  Sizes 4, 8, 9 use fixed residue
    representations (see _IRREDUCIBLE) so runs are bit-for-bit
    reproducible.  All field axioms are checked exhaustively at
    construction; a table bug cannot survive instantiation.
    """

    def __init__(self, q: int):
        if q < 2:
            raise ValueError("field size must be >= 2")
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds the supported bound {MAX_FIELD_SIZE}")
        self.q = q
        self.p = self._characteristic(q)
        self.add, self.mul = self._build_tables(q)
        self.neg = [self._find_neg(a) for a in range(q)]
        self.inv = [0] + [self._find_inv(a) for a in range(1, q)]
        self._verify_axioms()

    @staticmethod
    def _characteristic(q: int) -> int:
        if q in _IRREDUCIBLE:
            return _IRREDUCIBLE[q][0]
        for p in range(2, q + 1):
            if q % p == 0:
                if q != p:
                    raise ValueError(f"{q} is not a prime power with a fixed representation")
                return p
        raise ValueError(f"{q} is not a prime power")

    def _build_tables(self, q: int) -> tuple[list[list[int]], list[list[int]]]:
        if q not in _IRREDUCIBLE:
            add = [[(a + b) % q for b in range(q)] for a in range(q)]
            mul = [[(a * b) % q for b in range(q)] for a in range(q)]
            return add, mul
        p, modulus = _IRREDUCIBLE[q]
        k = len(modulus) - 1

        def digits(e: int) -> list[int]:
            out = []
            for _ in range(k):
                out.append(e % p)
                e //= p
            return out

        def encode(ds: list[int]) -> int:
            e = 0
            for d in reversed(ds):
                e = e * p + d
            return e

        def reduce(ds: list[int]) -> list[int]:
            ds = list(ds)
            for i in range(len(ds) - 1, k - 1, -1):
                c = ds[i]
                if c:
                    ds[i] = 0
                    for j, m in enumerate(modulus[:-1]):
                        ds[i - k + j] = (ds[i - k + j] - c * m) % p
            return ds[:k]

        add = [
            [encode([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(q)]
            for a in range(q)
        ]
        mul = []
        for a in range(q):
            da = digits(a)
            row = []
            for b in range(q):
                db = digits(b)
                conv = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        conv[i + j] = (conv[i + j] + x * y) % p
                row.append(encode(reduce(conv)))
            mul.append(row)
        return add, mul

    def _find_neg(self, a: int) -> int:
        for b in range(self.q):
            if self.add[a][b] == 0:
                return b
        raise AssertionError(f"no additive inverse for {a}")

    def _find_inv(self, a: int) -> int:
        for b in range(1, self.q):
            if self.mul[a][b] == 1:
                return b
        raise AssertionError(f"no multiplicative inverse for {a}")

    def _verify_axioms(self) -> None:
        q, add, mul = self.q, self.add, self.mul
        es = range(q)
        for a in es:
            if add[0][a] != a or mul[1][a] != a or mul[0][a] != 0:
                raise AssertionError("identity axiom failed")
            if add[a][self.neg[a]] != 0:
                raise AssertionError("additive inverse failed")
            if a and mul[a][self.inv[a]] != 1:
                raise AssertionError("multiplicative inverse failed")
        for a in es:
            for b in es:
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise AssertionError("commutativity failed")
                for c in es:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise AssertionError("additive associativity failed")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise AssertionError("multiplicative associativity failed")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise AssertionError("distributivity failed")

    # -- matrix helpers -----------------------------------------------

    def mat_mul(self, a: Matrix, b: Matrix) -> Matrix:
        n = len(a)
        add, mul = self.add, self.mul
        out = []
        for i in range(n):
            row = []
            ai = a[i]
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = add[acc][mul[ai[k]][b[k][j]]]
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def det(self, m: Matrix) -> int:
        n = len(m)
        rows = [list(r) for r in m]
        add, mul, neg, inv = self.add, self.mul, self.neg, self.inv
        d = 1
        for col in range(n):
            pivot = next((i for i in range(col, n) if rows[i][col]), None)
            if pivot is None:
                return 0
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                d = neg[d]
            pv = rows[col][col]
            d = mul[d][pv]
            pv_inv = inv[pv]
            for i in range(col + 1, n):
                factor = mul[rows[i][col]][pv_inv]
                if factor:
                    for j in range(col, n):
                        rows[i][j] = add[rows[i][j]][neg[mul[factor][rows[col][j]]]]
        return d

    def identity(self, n: int) -> Matrix:
        return tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )


@dataclass(frozen=True)
class MatTuple:
    """r invertible matrices over a shared field; a representation point."""

    n: int
    entries: tuple[Matrix, ...]
    field: PrimeField

    def __post_init__(self):
        for m in self.entries:
            if len(m) != self.n or any(len(row) != self.n for row in m):
                raise ValueError(f"expected {self.n}x{self.n} matrices")
            if self.field.det(m) == 0:
                raise ValueError("matrices must be invertible")


def gl_order(n: int, q: int) -> int:
    """|GL(n, F_q)| = prod_{i=0..n-1} (q^n - q^i)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def enumerate_gl(n: int, field: PrimeField) -> list[Matrix]:
    """All invertible n x n matrices; guarded against huge enumerations."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = field.q
    if q ** (n * n) > MAX_MATRIX_ENUM:
        raise TooLargeError(
            f"q^(n^2) = {q ** (n * n)} exceeds the enumeration guard {MAX_MATRIX_ENUM}"
        )
    out = []
    for flat in product(range(q), repeat=n * n):
        m = tuple(flat[i * n : (i + 1) * n] for i in range(n))
        if field.det(m):
            out.append(m)
    expected = gl_order(n, q)
    if len(out) != expected:
        raise AssertionError(
            f"|GL({n}, F_{q})| came out {len(out)}, expected {expected}"
        )
    return out


def is_abs_irreducible(mats, field: PrimeField) -> bool:
    """Does the unital algebra generated by the tuple fill all of M_n?

    Breadth-first span closure: start from the identity, keep a
    row-reduced basis of the span (vectors of length n^2), and multiply
    basis elements by generators until nothing new appears or the span
    has dimension n^2.
    """
    if isinstance(mats, MatTuple):
        mats = mats.entries
    n = len(mats[0])
    if n == 1:
        return True
    full = n * n
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv

    # basis: pivot column -> normalized vector
    basis: dict[int, list[int]] = {}

    def insert(vec: list[int]) -> bool:
        for pivot, row in basis.items():
            c = vec[pivot]
            if c:
                for i in range(full):
                    if row[i]:
                        vec[i] = add[vec[i]][neg[mul[c][row[i]]]]
        pivot = next((i for i in range(full) if vec[i]), None)
        if pivot is None:
            return False
        c_inv = inv[vec[pivot]]
        basis[pivot] = [mul[c_inv][v] for v in vec]
        return True

    frontier: list[Matrix] = []
    ident = field.identity(n)
    insert([ident[i][j] for i in range(n) for j in range(n)])
    frontier.append(ident)
    while frontier:
        if len(basis) == full:
            return True
        current = frontier.pop()
        for g in mats:
            candidate = field.mat_mul(current, g)
            vec = [candidate[i][j] for i in range(n) for j in range(n)]
            if insert(vec):
                frontier.append(candidate)
    return len(basis) == full


def count_irr_tuples(n: int, r: int, field: PrimeField) -> int:
    """Raw number of absolutely irreducible r-tuples in GL(n, F_q)."""
    if r < 1:
        raise ValueError("rank r must be >= 1")
    q = field.q
    total = gl_order(n, q) ** r
    if total > MAX_TUPLE_ENUM:
        raise TooLargeError(
            f"|GL|^r = {total} tuples exceed the enumeration guard {MAX_TUPLE_ENUM}"
        )
    gl = enumerate_gl(n, field)
    count = 0
    for mats in product(gl, repeat=r):
        if is_abs_irreducible(mats, field):
            count += 1
    return count


def count_irr_classes(n: int, r: int, field: PrimeField) -> int:
    """Conjugation classes of absolutely irreducible r-tuples.

    Raw count divided by |PGL(n, F_q)|; the action is free on this
    locus, so a nonzero remainder means the irreducibility test is
    broken and raises.
    """
    q = field.q
    raw = count_irr_tuples(n, r, field)
    pgl = gl_order(n, q) // (q - 1)
    classes, rem = divmod(raw, pgl)
    if rem:
        raise NonIntegerOrbitCountError(
            f"raw count {raw} not divisible by |PGL({n}, F_{q})| = {pgl}"
        )
    return classes


@dataclass(frozen=True)
class VerifyRow:
    """One oracle comparison: brute-force count vs symbolic value at x=q."""

    n: int
    r: int
    q: int
    raw_count: int
    orbit_count: int
    symbolic: int

    @property
    def match(self) -> bool:
        return self.orbit_count == self.symbolic


def verify_cases(n: int, r: int, qs: list[int]) -> list[VerifyRow]:
    """Compare brute-force class counts with the pipeline at each q."""
    from .epolys import b_poly

    poly = b_poly(n, r)
    rows = []
    for q in qs:
        field = PrimeField(q)
        raw = count_irr_tuples(n, r, field)
        pgl = gl_order(n, q) // (q - 1)
        classes, rem = divmod(raw, pgl)
        if rem:
            raise NonIntegerOrbitCountError(
                f"raw count {raw} not divisible by |PGL({n}, F_{q})| = {pgl}"
            )
        value = poly(q)
        rows.append(
            VerifyRow(
                n=n, r=r, q=q, raw_count=raw, orbit_count=classes,
                symbolic=int(value),
            )
        )
    return rows


def overall_status(rows: list[VerifyRow]) -> str:
    """'ok', 'warning' (one bad characteristic) or 'failure' (two or more).

    Counting over a finite field can in principle go wrong at finitely
    many characteristics, so a single bad characteristic for an (n, r)
    pair is flagged for investigation rather than treated as disproof.
    """
    bad_chars = {PrimeField._characteristic(row.q) for row in rows if not row.match}
    if not bad_chars:
        return "ok"
    if len(bad_chars) == 1:
        return "warning"
    return "failure"
