"""Integer partitions, rectangle collections and the gluing map.

Partitions are stored as multiplicity vectors: the partition written
1^2 2 of n = 4 has mult = (2, 1, 0, 0), meaning two parts of size 1 and
one of size 2.  These label the polystable strata of the character
varieties.

A RectPartition is a multiset of l-by-h rectangles of total area n,
counted with multiplicities; gluing stacks all rectangles of equal
width l into a single part of size l repeated m_l = sum_h h*k_{l,h}
times.  The fibers of the gluing map index the summands of the stratum
formula in epolys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import factorial, prod

from .errors import PartitionSyntaxError, SumMismatchError, ZeroPartError


def multinomial(parts: tuple[int, ...] | list[int]) -> int:
    """(sum parts)! / prod(parts!); exact."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


@dataclass(frozen=True)
class Partition:
    """Partition of n as a multiplicity vector; mult[j-1] parts of size j."""

    n: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("partition size must be >= 1")
        object.__setattr__(self, "mult", tuple(self.mult))
        if len(self.mult) != self.n:
            raise ValueError(
                f"multiplicity vector has length {len(self.mult)}, expected {self.n}"
            )
        if any(k < 0 for k in self.mult):
            raise ValueError("multiplicities must be non-negative")
        total = sum(j * k for j, k in enumerate(self.mult, start=1))
        if total != self.n:
            raise ValueError(f"parts sum to {total}, expected {self.n}")

    @classmethod
    def from_parts(cls, n: int, parts: list[int] | tuple[int, ...]) -> Partition:
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        return cls(n, tuple(mult))

    @property
    def length(self) -> int:
        """Number of parts."""
        return sum(self.mult)

    def parts(self) -> list[int]:
        """Ascending part list, e.g. [1, 1, 2] for 1^2 2."""
        out: list[int] = []
        for j, k in enumerate(self.mult, start=1):
            out.extend([j] * k)
        return out

    def multiplicity(self, j: int) -> int:
        if not 1 <= j <= self.n:
            return 0
        return self.mult[j - 1]

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class RectPartition:
    """Multiset of l-by-h rectangles with total area n.

    blocks holds ((l, h), count) pairs sorted by (l, h); counts are
    strictly positive, absent cells mean zero.
    """

    n: int
    blocks: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("total area must be >= 1")
        blocks = tuple(sorted(((l, h), k) for (l, h), k in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        seen = set()
        area = 0
        for (l, h), k in blocks:
            if l < 1 or h < 1:
                raise ValueError(f"rectangle sides must be positive, got {l}x{h}")
            if k < 1:
                raise ValueError("stored multiplicities must be strictly positive")
            if (l, h) in seen:
                raise ValueError(f"duplicate rectangle cell {(l, h)}")
            seen.add((l, h))
            area += l * h * k
        if area != self.n:
            raise ValueError(f"rectangle areas sum to {area}, expected {self.n}")

    @classmethod
    def from_dict(cls, n: int, cells: dict[tuple[int, int], int]) -> RectPartition:
        return cls(n, tuple((lh, k) for lh, k in cells.items() if k))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.blocks)

    def __str__(self) -> str:
        return " ".join(
            f"{l}x{h}" + (f"^{k}" if k > 1 else "") for (l, h), k in self.blocks
        )


def _part_lists(n: int, max_part: int) -> list[list[int]]:
    """All descending part lists of n with parts <= max_part."""
    if n == 0:
        return [[]]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _part_lists(n - first, first):
            out.append([first] + rest)
    return out


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, lexicographically ordered on multiplicity vectors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ps = [Partition.from_parts(n, parts) for parts in _part_lists(n, n)]
    ps.sort(key=lambda p: p.mult)
    return ps


def enumerate_rect_partitions(n: int) -> list[RectPartition]:
    """All rectangle multisets of total area n, deterministically ordered."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cells = [(l, h) for l in range(1, n + 1) for h in range(1, n // l + 1)]

    def fill(remaining: int, start: int) -> list[dict[tuple[int, int], int]]:
        if remaining == 0:
            return [{}]
        out = []
        for i in range(start, len(cells)):
            l, h = cells[i]
            area = l * h
            if area > remaining:
                continue
            for k in range(1, remaining // area + 1):
                for rest in fill(remaining - k * area, i + 1):
                    rest = dict(rest)
                    rest[(l, h)] = k
                    out.append(rest)
        return out

    rps = [RectPartition.from_dict(n, cells_used) for cells_used in fill(n, 0)]
    rps.sort(key=lambda rp: rp.blocks)
    return rps


def glue(rp: RectPartition) -> Partition:
    """Stack rectangles of equal width: part l gets m_l = sum_h h*k_{l,h}."""
    mult = [0] * rp.n
    for (l, h), k in rp.blocks:
        mult[l - 1] += h * k
    return Partition(rp.n, tuple(mult))


def fiber(m: Partition) -> list[RectPartition]:
    """All rectangle multisets gluing to m.

    Factors over widths: for each part size l with m_l > 0, the heights
    of the width-l rectangles form a partition of m_l; the fiber is the
    product of these independent choices.
    """
    per_width: list[list[dict[tuple[int, int], int]]] = []
    for l in range(1, m.n + 1):
        ml = m.mult[l - 1]
        if ml == 0:
            continue
        choices = []
        for hp in enumerate_partitions(ml):
            cells = {
                (l, h): k for h, k in enumerate(hp.mult, start=1) if k
            }
            choices.append(cells)
        per_width.append(choices)
    out = []
    for combo in product(*per_width):
        cells: dict[tuple[int, int], int] = {}
        for part in combo:
            cells.update(part)
        out.append(RectPartition.from_dict(m.n, cells))
    out.sort(key=lambda rp: rp.blocks)
    return out


_PART_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str, n: int) -> Partition:
    """Parse exponent notation like '1^2 2' into a partition of n.

    Grammar: PART (SPACE PART)*, PART := INT ('^' INT)?.  Repeated part
    sizes accumulate, so '1 1' and '1^2' agree.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    tokens = text.split()
    if not tokens:
        raise PartitionSyntaxError("empty partition expression")
    counts: dict[int, int] = {}
    total = 0
    for tok in tokens:
        match = _PART_RE.match(tok)
        if not match:
            raise PartitionSyntaxError(f"bad partition token {tok!r}")
        size = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if size == 0 or exponent == 0:
            raise ZeroPartError(f"zero part size or exponent in token {tok!r}")
        counts[size] = counts.get(size, 0) + exponent
        total += size * exponent
    if total != n:
        raise SumMismatchError(f"parts sum to {total}, expected {n}")
    mult = [0] * n
    for size, k in counts.items():
        mult[size - 1] = k
    return Partition(n, tuple(mult))


def format_partition(p: Partition) -> str:
    """Exponent notation with ascending part sizes, e.g. '1^2 2'."""
    return " ".join(
        f"{j}" + (f"^{k}" if k > 1 else "")
        for j, k in enumerate(p.mult, start=1)
        if k
    )
