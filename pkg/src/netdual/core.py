"""Squarefree monomials, monomial ideals, simplicial complexes and graphs.

Supports are bitmask ints (see ``_bits``). Indices are 0-based internally and
rendered 1-based, so vertex ``0`` prints as ``x1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from ._bits import (
    indices_of,
    iter_bits,
    mask_of,
    maximal_sets,
    minimal_sets,
    minimal_transversals,
    sort_masks,
)
from .errors import SizeLimitError

MAX_VARIABLES = 64


@dataclass(frozen=True)
class GroundSet:
    """Variables ``x_1..x_n`` of the polynomial ring, with display labels."""

    n: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set needs at least one variable")
        if self.n > MAX_VARIABLES:
            raise SizeLimitError(
                f"{self.n} variables exceeds the bitset cap of {MAX_VARIABLES}"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
        if len(set(self.labels)) != self.n:
            raise ValueError("variable labels must be distinct")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def render(self, mask: int, sep: str = "*") -> str:
        if mask == 0:
            return "1"
        return sep.join(self.labels[i] for i in iter_bits(mask))

    def check(self, mask: int) -> int:
        if mask < 0 or mask >> self.n:
            raise ValueError(f"support {indices_of(mask)} outside ground set of size {self.n}")
        return mask


def monomial(*indices: int) -> int:
    """Support bitmask of ``x_{i1} ... x_{ik}`` from 1-based indices."""
    return mask_of(i - 1 for i in indices)


def one_based(mask: int) -> list[int]:
    return [i + 1 for i in indices_of(mask)]


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal given by its minimal generators."""

    ground: GroundSet
    gens: tuple[int, ...]

    def __post_init__(self):
        for g in self.gens:
            self.ground.check(g)
            if g == 0:
                raise ValueError("the empty monomial generates the unit ideal")
        if minimal_sets(self.gens) != tuple(self.gens):
            raise ValueError("generators must be a canonically sorted antichain; use minimalize()")

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> list[int]:
        return sorted({g.bit_count() for g in self.gens})

    def contains(self, mask: int) -> bool:
        """Membership of the monomial with support ``mask``."""
        return any(g & mask == g for g in self.gens)

    def __contains__(self, mask: int) -> bool:
        return self.contains(mask)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "<" + ", ".join(self.ground.render(g) for g in self.gens) + ">"

    def as_lists(self) -> list[list[int]]:
        return [one_based(g) for g in self.gens]


def minimalize(ground: GroundSet, monomials: Iterable[int]) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``monomials``."""
    monomials = [ground.check(m) for m in monomials]
    if any(m == 0 for m in monomials):
        raise ValueError("the empty monomial generates the unit ideal, not a proper ideal")
    return MonomialIdeal(ground, minimal_sets(monomials))


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    ground = ideals[0].ground
    return minimalize(ground, [g for I in ideals for g in I.gens])


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Simplicial complex on the vertex set ``vertices`` (a subset of the ground).

    ``facets`` is an inclusion antichain. The complex always contains the empty
    face, so ``{}`` is stored as ``facets == (0,)``.
    """

    ground: GroundSet
    facets: tuple[int, ...]
    vertices: int = -1
    _nonfaces: tuple[int, ...] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.vertices == -1:
            object.__setattr__(self, "vertices", self.ground.full)
        self.ground.check(self.vertices)
        facets = maximal_sets(self.facets) if self.facets else (0,)
        for f in facets:
            if f & ~self.vertices:
                raise ValueError(f"facet {one_based(f)} leaves the vertex set")
        object.__setattr__(self, "facets", facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.ground, self.vertices, self.facets) == (
            other.ground,
            other.vertices,
            other.facets,
        )

    def __hash__(self):
        return hash((self.ground, self.vertices, self.facets))

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_empty_complex(self) -> bool:
        """True for ``{}`` (only the empty face)."""
        return self.facets == (0,)

    @property
    def is_simplex(self) -> bool:
        return self.facets == (self.vertices,)

    def is_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    @cached_property
    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Minimal subsets of the vertex set that are not faces."""
        if self._nonfaces is not None:
            return self._nonfaces
        return minimal_transversals(self.vertices & ~f for f in self.facets)

    def faces(self) -> list[int]:
        """Every face, canonically sorted. Exponential in the facet size."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return list(sort_masks(seen))

    def facet_lists(self) -> list[list[int]]:
        return [one_based(f) for f in self.facets]


def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex: faces are supports of monomials outside ``ideal``."""
    full = ideal.ground.full
    covers = minimal_transversals(ideal.gens)
    facets = [full & ~c for c in covers]
    return SimplicialComplex(ideal.ground, tuple(facets), full, _nonfaces=ideal.gens)


def sr_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal, generated by the minimal non-faces of ``cx``.

    Vertices of the ground set outside ``cx.vertices`` are not faces, so they
    appear as linear generators.
    """
    outside = [1 << i for i in iter_bits(cx.ground.full & ~cx.vertices)]
    return minimalize(cx.ground, list(cx.minimal_nonfaces) + outside)


def induced_subcomplex(cx: SimplicialComplex, subset: int) -> SimplicialComplex:
    """Faces of ``cx`` contained in ``subset``; the result lives on vertex set ``subset``."""
    cx.ground.check(subset)
    if subset & ~cx.vertices:
        raise ValueError("restriction set must lie inside the vertex set")
    facets = maximal_sets(f & subset for f in cx.facets)
    nonfaces = None
    if cx._nonfaces is not None or "minimal_nonfaces" in cx.__dict__:
        nonfaces = tuple(g for g in cx.minimal_nonfaces if g & subset == g)
    return SimplicialComplex(cx.ground, facets, subset, _nonfaces=nonfaces)


def simplex(ground: GroundSet, vertices: int | None = None) -> SimplicialComplex:
    vertices = ground.full if vertices is None else vertices
    return SimplicialComplex(ground, (vertices,), vertices)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices ``0..vertices-1`` without loops or multi-edges."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge ({u + 1}, {v + 1}) out of range")
            normalized.add((min(u, v), max(u, v)))
        if len(normalized) != len(self.edges):
            raise ValueError("repeated edge")
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, tuple(combinations(range(n), 2)))

    def adjacency(self) -> list[int]:
        adj = [0] * self.vertices
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj


def count_components(adj: Sequence[int], subset: int) -> int:
    """Connected components of the subgraph induced on ``subset``."""
    count = 0
    rest = subset
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        rest &= ~comp
        count += 1
    return count


def graph_components(graph: SimpleGraph, subset: int | Iterable[int] | None = None) -> int:
    """Number of connected components of ``graph`` restricted to ``subset``.

    ``subset`` is a bitmask or an iterable of 0-based vertices; the empty set
    has 0 components.
    """
    if subset is None:
        subset = (1 << graph.vertices) - 1
    elif not isinstance(subset, int):
        subset = mask_of(subset)
    if subset >> graph.vertices:
        raise ValueError("subset outside the vertex range")
    return count_components(graph.adjacency(), subset)
