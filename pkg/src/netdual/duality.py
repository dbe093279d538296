"""Minimal cofaces, primary decomposition and Alexander duality."""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import iter_bits, minimal_sets, sort_masks
from .core import (
    GroundSet,
    MonomialIdeal,
    SimplicialComplex,
    minimalize,
    one_based,
    sr_complex,
)
from .errors import CrossCheckError


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Intersection of the prime ideals ``<x_i : i in S>`` for ``S`` in ``components``."""

    ground: GroundSet
    components: tuple[int, ...]

    def __str__(self) -> str:
        return " ∩ ".join(
            "<" + ", ".join(self.ground.labels[i] for i in iter_bits(c)) + ">"
            for c in self.components
        )

    def as_lists(self) -> list[list[int]]:
        return [one_based(c) for c in self.components]

    def contains(self, mask: int) -> bool:
        """Membership of a monomial in the intersection."""
        return all(c & mask for c in self.components)


def minimal_cofaces(cx: SimplicialComplex) -> tuple[int, ...]:
    if cx.is_simplex:
        raise ValueError("the full simplex has no cofaces: its ideal is zero")
    return minimal_sets(cx.vertices & ~f for f in cx.facets)


def primary_decomposition(ideal: MonomialIdeal) -> PrimaryDecomposition:
    if ideal.is_zero:
        raise ValueError("the zero ideal has no primary decomposition")
    return PrimaryDecomposition(ideal.ground, minimal_cofaces(sr_complex(ideal)))


def minimal_vertex_covers(gens: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal sets meeting every generator, by branching on uncovered generators.

    Independent of the incremental transversal routine used for
    Stanley-Reisner complexes; the two are cross-checked in ``alexander_dual``.
    """
    found: set[int] = set()
    gens = sorted(gens, key=int.bit_count)

    def irredundant(chosen: int) -> bool:
        # every chosen vertex must be the only chosen vertex of some generator
        private = 0
        for g in gens:
            hit = g & chosen
            if hit and hit & (hit - 1) == 0:
                private |= hit
        return private == chosen

    def branch(chosen: int, forbidden: int) -> None:
        for g in gens:
            if not g & chosen:
                options = g & ~forbidden
                for v in iter_bits(options):
                    bit = 1 << v
                    nxt = chosen | bit
                    if irredundant(nxt):
                        branch(nxt, forbidden)
                    # later siblings must avoid v, else covers repeat
                    forbidden |= bit
                return
        found.add(chosen)

    branch(0, 0)
    return minimal_sets(found)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual of a nonzero squarefree monomial ideal.

    Computed twice: by monomializing the minimal primes (vertex covers of the
    generators) and from the facet complements of the Stanley-Reisner
    complex. A disagreement raises ``CrossCheckError``.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no Alexander dual")
    by_primes = minimalize(ideal.ground, minimal_vertex_covers(ideal.gens))
    cx = sr_complex(ideal)
    by_facets = minimalize(ideal.ground, (cx.vertices & ~f for f in cx.facets))
    if by_primes != by_facets:
        raise CrossCheckError(
            f"Alexander dual routes disagree: {by_primes} versus {by_facets}"
        )
    return by_primes


def dual_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Combinatorial Alexander dual relative to the vertex set of ``cx``.

    Faces are the sets whose complement is not a face of ``cx``, so the
    facets are the complements of the minimal non-faces.
    """
    if cx.is_simplex:
        raise ValueError("the full simplex has a void Alexander dual")
    facets = sort_masks(cx.vertices & ~g for g in cx.minimal_nonfaces)
    nonfaces = minimal_sets(cx.vertices & ~f for f in cx.facets)
    return SimplicialComplex(cx.ground, facets, cx.vertices, _nonfaces=nonfaces)


def codimension(ideal: MonomialIdeal) -> int:
    """Height of the ideal: the smallest minimal prime."""
    return min(c.bit_count() for c in primary_decomposition(ideal).components)
