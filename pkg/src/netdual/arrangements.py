"""Line arrangements in the projective plane and their rank-2 flats.

Lines are numbered ``0..n-1`` internally and ``1..n`` in all I/O. Only the
multiple points (three or more lines) are stored; every other pair of lines
meets in an implicit double point.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from ._bits import indices_of, mask_of, sort_masks
from .core import SimpleGraph, one_based
from .errors import CrossCheckError


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    v = tuple(x // g for x in v)
    lead = next(x for x in v if x)
    return tuple(-x for x in v) if lead < 0 else v


@dataclass(frozen=True)
class RationalLine:
    """The line ``a x + b y + c z = 0``, stored primitive with a positive leading entry."""

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, a, b, c) -> RationalLine:
        fr = [Fraction(x) for x in (a, b, c)]
        if not any(fr):
            raise ValueError("(0, 0, 0) does not define a line")
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        return cls(*_primitive([int(x * den) for x in fr]))

    def __post_init__(self):
        v = (self.a, self.b, self.c)
        if not any(v):
            raise ValueError("(0, 0, 0) does not define a line")
        if _primitive(v) != v:
            raise ValueError(f"{v} is not in primitive form; use RationalLine.of")

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def meet(self, other: RationalLine) -> tuple[int, int, int]:
        """Intersection point as a primitive integer vector (a cross product)."""
        a1, b1, c1 = self.coords
        a2, b2, c2 = other.coords
        p = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
        if not any(p):
            raise ValueError(f"lines {self.coords} and {other.coords} coincide")
        return _primitive(p)


@dataclass(frozen=True)
class LineArrangement:
    """``n`` lines with their multiple points (sets of at least 3 concurrent lines)."""

    n: int
    multiple_points: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("an arrangement needs at least two lines")
        pts = sort_masks(self.multiple_points)
        if len(pts) != len(self.multiple_points):
            raise ValueError("repeated multiple point")
        for p in pts:
            if p >> self.n:
                raise ValueError(f"point {one_based(p)} uses a line beyond {self.n}")
            if p.bit_count() < 3:
                raise ValueError(f"point {one_based(p)} has fewer than 3 lines; doubles are implicit")
        for p, q in combinations(pts, 2):
            if (p & q).bit_count() > 1:
                raise ValueError(
                    f"points {one_based(p)} and {one_based(q)} share two lines"
                )
        object.__setattr__(self, "multiple_points", pts)

    @classmethod
    def from_lists(cls, n: int, points: Iterable[Iterable[int]]) -> LineArrangement:
        """Build from 1-based line lists."""
        return cls(n, tuple(mask_of(i - 1 for i in p) for p in points))

    def double_points(self) -> tuple[int, ...]:
        covered = set()
        for p in self.multiple_points:
            for a, b in combinations(indices_of(p), 2):
                covered.add((a, b))
        return sort_masks(
            (1 << a) | (1 << b) for a, b in combinations(range(self.n), 2) if (a, b) not in covered
        )

    def points(self) -> tuple[int, ...]:
        """Every intersection point, double points included."""
        return sort_masks(self.multiple_points + self.double_points())

    def mu(self, point: int) -> int:
        return point.bit_count() - 1

    def is_flat(self, point: int) -> bool:
        if point.bit_count() >= 3:
            return point in self.multiple_points
        if point.bit_count() == 2:
            return not any(point & p == point for p in self.multiple_points)
        return False

    def check_incidences(self) -> None:
        """Each pair of lines meets exactly once: ``sum C(mu+1, 2) = C(n, 2)``."""
        total = sum(comb(p.bit_count(), 2) for p in self.points())
        if total != comb(self.n, 2):
            raise CrossCheckError(f"incidence count {total} != C({self.n},2)")

    def point_lists(self) -> list[list[int]]:
        return [one_based(p) for p in self.multiple_points]


@dataclass(frozen=True)
class NetCandidate:
    """A partition of the lines into ``k`` blocks of ``d`` plus a set ``X`` of points."""

    k: int
    d: int
    blocks: tuple[int, ...]
    X: tuple[int, ...]

    def __post_init__(self):
        if self.k < 3 or self.d < 2:
            raise ValueError("a potential (k,d) net needs k >= 3 and d >= 2")
        if len(self.blocks) != self.k:
            raise ValueError(f"expected {self.k} blocks, got {len(self.blocks)}")
        union = 0
        for b in self.blocks:
            if b.bit_count() != self.d:
                raise ValueError(f"block {one_based(b)} does not have {self.d} lines")
            if union & b:
                raise ValueError("blocks overlap")
            union |= b
        if union != (1 << (self.k * self.d)) - 1:
            raise ValueError("blocks must partition lines 1..kd")
        for x in self.X:
            if x.bit_count() < 2 or x & ~union:
                raise ValueError(f"X member {one_based(x)} is not a set of >= 2 lines")
        if len(self.X) != len(set(self.X)):
            raise ValueError("repeated X member")
        object.__setattr__(self, "X", sort_masks(self.X))

    @property
    def n(self) -> int:
        return self.k * self.d

    @classmethod
    def from_lists(cls, blocks: Sequence[Sequence[int]], X: Iterable[Iterable[int]]) -> NetCandidate:
        masks = tuple(mask_of(i - 1 for i in b) for b in blocks)
        k = len(masks)
        d = masks[0].bit_count() if masks else 0
        return cls(k, d, masks, tuple(mask_of(i - 1 for i in x) for x in X))

    def block_of(self, line: int) -> int:
        for i, b in enumerate(self.blocks):
            if b >> line & 1:
                return i
        raise ValueError(f"line {line + 1} is in no block")

    def with_X(self, X: Iterable[int]) -> NetCandidate:
        return NetCandidate(self.k, self.d, self.blocks, tuple(X))

    def describe(self) -> str:
        sep = "" if self.n < 10 else "."
        blocks = "|" + "|".join(sep.join(map(str, one_based(b))) for b in self.blocks) + "|"
        return f"({self.k},{self.d}) candidate {blocks} with |X|={len(self.X)}"


def l2_from_coordinates(lines: Sequence[RationalLine]) -> LineArrangement:
    """Group pairwise intersection points exactly and keep those on 3+ lines."""
    if len(lines) < 2:
        raise ValueError("need at least two lines")
    if len(set(lines)) != len(lines):
        dup = next(l for l in lines if lines.count(l) > 1)
        raise ValueError(f"duplicate line {dup.coords}")
    classes: dict[tuple[int, int, int], int] = {}
    for i, j in combinations(range(len(lines)), 2):
        p = lines[i].meet(lines[j])
        classes[p] = classes.get(p, 0) | (1 << i) | (1 << j)
    arr = LineArrangement(len(lines), tuple(m for m in classes.values() if m.bit_count() >= 3))
    arr.check_incidences()
    return arr


def graphic_flats(graph: SimpleGraph) -> list[int]:
    """Rank-2 flats of the graphic matroid as bitmasks over edge indices.

    Triangles, disjoint edge pairs, and adjacent pairs whose closing edge is
    absent. Edge ``k`` is ``graph.edges[k]``.
    """
    index = {e: k for k, e in enumerate(graph.edges)}
    flats = []
    for (e, f) in combinations(graph.edges, 2):
        shared = set(e) & set(f)
        if not shared:
            flats.append((1 << index[e]) | (1 << index[f]))
            continue
        a, b = sorted(set(e) ^ set(f))
        third = index.get((a, b))
        if third is None:
            flats.append((1 << index[e]) | (1 << index[f]))
        else:
            flats.append((1 << index[e]) | (1 << index[f]) | (1 << third))
    return list(sort_masks(flats))


def kn_labels(n: int) -> tuple[str, ...]:
    sep = "" if n <= 9 else "_"
    return tuple(f"x{i + 1}{sep}{j + 1}" for i, j in combinations(range(n), 2))


def ceva(d: int) -> tuple[LineArrangement, NetCandidate]:
    """The Ceva arrangement ``(x^d - y^d)(x^d - z^d)(y^d - z^d)`` as a (3,d) net.

    Lines ``i``, ``d+j``, ``2d+k`` (0-based within blocks) are concurrent iff
    ``i + j + k = 0 mod d``; the blocks themselves meet at the three
    coordinate points.
    """
    if d < 2:
        raise ValueError("Ceva arrangements need d >= 2")
    blocks = tuple(((1 << d) - 1) << (b * d) for b in range(3))
    X = tuple(
        (1 << i) | (1 << (d + j)) | (1 << (2 * d + ((-i - j) % d)))
        for i in range(d)
        for j in range(d)
    )
    multiple = X + (blocks if d >= 3 else ())
    arr = LineArrangement(3 * d, multiple)
    return arr, NetCandidate(3, d, blocks, X)


def ceva_coordinates(d: int = 2) -> list[RationalLine]:
    """Rational equations exist only for ``d = 2``: ``x - y, x + y, x - z, x + z, y - z, y + z``."""
    if d != 2:
        raise ValueError("Ceva lines need d-th roots of unity; only d=2 is rational")
    return [
        RationalLine.of(1, -1, 0),
        RationalLine.of(1, 1, 0),
        RationalLine.of(1, 0, -1),
        RationalLine.of(1, 0, 1),
        RationalLine.of(0, 1, -1),
        RationalLine.of(0, 1, 1),
    ]


def hessian() -> tuple[LineArrangement, NetCandidate]:
    """Hesse arrangement: the 12 lines of the affine plane over GF(3).

    Lines are grouped in 4 parallel classes of 3 (the blocks); the 9 affine
    points are the quadruple points, each on one line of every class.
    Parallel lines meet in the 12 implicit double points.
    """
    directions = [(1, 0), (0, 1), (1, 1), (1, 2)]
    lines = []
    for dx, dy in directions:
        seen = []
        for x0 in range(3):
            for y0 in range(3):
                pts = frozenset(((x0 + t * dx) % 3, (y0 + t * dy) % 3) for t in range(3))
                if pts not in seen:
                    seen.append(pts)
        lines.extend(seen)
    points = []
    for x in range(3):
        for y in range(3):
            points.append(mask_of(k for k, ln in enumerate(lines) if (x, y) in ln))
    blocks = tuple(0b111 << (3 * b) for b in range(4))
    return LineArrangement(12, tuple(points)), NetCandidate(4, 3, blocks, tuple(points))


def is_isomorphic(a: LineArrangement, b: LineArrangement) -> bool:
    """Whether two arrangements have the same incidence structure up to relabeling."""
    import networkx as nx

    def incidence(arr: LineArrangement):
        g = nx.Graph()
        g.add_nodes_from((("L", i) for i in range(arr.n)), kind="line")
        for k, p in enumerate(arr.points()):
            g.add_node(("P", k), kind="point")
            for i in indices_of(p):
                g.add_edge(("L", i), ("P", k))
        return g

    if a.n != b.n:
        return False
    return nx.is_isomorphic(
        incidence(a), incidence(b), node_match=lambda x, y: x["kind"] == y["kind"]
    )
