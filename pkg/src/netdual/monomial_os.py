"""The monomial Orlik-Solomon ideal ``J`` of a matroid and its net subideals.

``J`` is generated by the squarefree monomials of the flats of rank 2 and
higher. Rank-1 flats are left out: they would put every variable in ``J``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from ._bits import sort_masks
from .arrangements import LineArrangement, NetCandidate, graphic_flats, kn_labels
from .core import GroundSet, MonomialIdeal, SimpleGraph, minimalize, one_based
from .errors import CrossCheckError


@dataclass(frozen=True)
class FlatFamily:
    """Flats of a matroid on ``ground``, as ``(mask, rank)`` pairs."""

    ground: GroundSet
    flats: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: dict[int, list[int]] = {}
        for mask, r in self.flats:
            self.ground.check(mask)
            if mask.bit_count() < 2:
                raise ValueError(f"flat {one_based(mask)} has fewer than 2 elements")
            if r < 2:
                raise ValueError(f"flat {one_based(mask)} has rank {r}; ranks start at 2")
            seen.setdefault(r, []).append(mask)
        for r, masks in seen.items():
            for a, b in combinations(masks, 2):
                if a & b in (a, b):
                    raise ValueError(
                        f"rank-{r} flats {one_based(a)} and {one_based(b)} are nested"
                    )
        object.__setattr__(
            self, "flats", tuple(sorted(set(self.flats), key=lambda f: (f[1], f[0].bit_count(), f[0])))
        )

    @classmethod
    def rank_two(cls, ground: GroundSet, masks: Iterable[int]) -> FlatFamily:
        return cls(ground, tuple((m, 2) for m in masks))

    @property
    def max_rank(self) -> int:
        return max((r for _, r in self.flats), default=0)


def flat_family(arr: LineArrangement) -> FlatFamily:
    """Rank-2 flats of an arrangement: multiple points and implicit double points."""
    return FlatFamily.rank_two(GroundSet(arr.n), arr.points())


def kn_family(n: int) -> FlatFamily:
    """Rank-2 flats of the graphic arrangement of ``K_n``, variables ``x_ij``."""
    if n < 3:
        raise ValueError("K_n needs n >= 3 for a rank-2 flat")
    graph = SimpleGraph.complete(n)
    return FlatFamily.rank_two(GroundSet(len(graph.edges), kn_labels(n)), graphic_flats(graph))


def graph_family(graph: SimpleGraph) -> FlatFamily:
    flats = graphic_flats(graph)
    if not flats:
        raise ValueError("graph has fewer than two edges; no rank-2 flats")
    labels = tuple(f"x{u + 1}_{v + 1}" for u, v in graph.edges)
    return FlatFamily.rank_two(GroundSet(len(graph.edges), labels), flats)


def build_J(source: FlatFamily | LineArrangement) -> MonomialIdeal:
    if isinstance(source, LineArrangement):
        source = flat_family(source)
    if not source.flats:
        raise ValueError("no flats given")
    return minimalize(source.ground, (m for m, _ in source.flats))


def kn_ideal(n: int) -> MonomialIdeal:
    """``J(K_n) = <x_ij x_kl, x_ij x_ik x_jk>``."""
    return build_J(kn_family(n))


def j_pi(c: NetCandidate) -> MonomialIdeal:
    return MonomialIdeal(GroundSet(c.n), sort_masks(c.blocks))


def j_x(c: NetCandidate) -> MonomialIdeal:
    """One monomial per point of ``X``; the zero ideal when ``X`` is empty."""
    return minimalize(GroundSet(c.n), c.X)


def split_JY(arr: LineArrangement, c: NetCandidate) -> MonomialIdeal:
    """Generators of ``J`` coming from flats outside ``X``."""
    if arr.n != c.n:
        raise ValueError(f"arrangement has {arr.n} lines, candidate {c.n}")
    for x in c.X:
        if not arr.is_flat(x):
            raise ValueError(f"X member {one_based(x)} is not a point of the arrangement")
    ground = GroundSet(arr.n)
    xs = set(c.X)
    jy = minimalize(ground, (p for p in arr.points() if p not in xs))
    J = build_J(arr)
    if sort_masks(j_x(c).gens + jy.gens) != J.gens:
        raise CrossCheckError("J_X + J_Y does not reproduce J")
    if all(x.bit_count() >= 3 for x in c.X):
        missing = [q for q in quadratic_part(J).gens if q not in set(jy.gens)]
        if missing:
            raise CrossCheckError(f"quadric {one_based(missing[0])} of J is not in J_Y")
    return jy


def quadratic_part(J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(J.ground, tuple(g for g in J.gens if g.bit_count() == 2))
