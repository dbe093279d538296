"""Reduced simplicial homology over the rationals or a prime field.

Ranks come from sparse row reduction: fraction-free over the integers for
the rationals, modular for ``GF(p)``. Large complexes are shrunk before any
matrix is built, using homotopy- and duality-invariance of the dimensions:

* the nerve of the facet cover is homotopy equivalent to the complex;
* combinatorial Alexander duality on a vertex set ``V`` gives
  ``dim H~_i(D) = dim H~_{|V|-i-3}(D^dual)``, and the dual's facets are the
  complements of the minimal non-faces.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import gcd

from ._bits import iter_bits, sort_masks

DEFAULT_PRIME = 32003
DIRECT_FACE_BUDGET = 4096


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field: the rationals (``p == 0``) or ``GF(p)``."""

    p: int = 0

    def __post_init__(self):
        if self.p and (self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p**0.5) + 1))):
            raise ValueError(f"{self.p} is not prime")

    @property
    def tag(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> FieldChoice:
        """``q``/``qq`` for the rationals, ``gf:p`` for a prime field."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "rationals"):
            return cls(0)
        if t.startswith("gf:") or t.startswith("gf"):
            digits = t[3:] if t.startswith("gf:") else t[2:]
            return cls(int(digits) if digits else DEFAULT_PRIME)
        raise ValueError(f"unknown field {text!r}; expected q or gf:p")

    def __str__(self) -> str:
        return self.tag


QQ = FieldChoice(0)


def rank(rows: Iterable[dict[int, int]], field: FieldChoice = QQ) -> int:
    """Rank of a sparse integer matrix given as ``{column: entry}`` rows."""
    p = field.p
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: (v % p if p else v) for c, v in row.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                if p:
                    inv = pow(row[col], -1, p)
                    row = {c: v * inv % p for c, v in row.items()}
                pivots[col] = row
                break
            a, b = piv[col], row[col]
            if p:
                for c, v in piv.items():
                    nv = (row.get(c, 0) - b * v) % p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                new = {c: a * v for c, v in row.items()}
                for c, v in piv.items():
                    nv = new.get(c, 0) - b * v
                    if nv:
                        new[c] = nv
                    else:
                        new.pop(c, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; ``dims[0]`` is degree -1, ``dims[1]`` degree 0, ..."""

    dims: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        if 0 <= i < len(self.dims):
            return self.dims[i]
        return 0

    @property
    def top(self) -> int:
        return len(self.dims) - 2

    def nonzero(self) -> dict[int, int]:
        return {q - 1: d for q, d in enumerate(self.dims) if d}

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic ``sum (-1)^q dim H~_q``."""
        return sum((-1) ** (q - 1) * d for q, d in enumerate(self.dims))


def _profile(dims: dict[int, int], top: int) -> HomologyProfile:
    return HomologyProfile(tuple(dims.get(q, 0) for q in range(-1, top + 1)))


def homology_of_faces(faces_by_size: dict[int, list[int]], field: FieldChoice = QQ) -> HomologyProfile:
    """Reduced homology of the chain complex spanned by the given faces.

    ``faces_by_size[s]`` lists the faces with ``s`` vertices; size 0 holds the
    empty face.
    """
    top = max(faces_by_size) - 1
    index = {s: {f: i for i, f in enumerate(fs)} for s, fs in faces_by_size.items()}
    ranks = {}
    for s in range(1, top + 2):
        lower = index.get(s - 1, {})
        rows = []
        for f in faces_by_size.get(s, []):
            row = {}
            for pos, v in enumerate(iter_bits(f)):
                row[lower[f & ~(1 << v)]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[s] = rank(rows, field) if rows else 0
    dims = {}
    for s in range(0, top + 2):
        dims[s - 1] = len(faces_by_size.get(s, [])) - ranks.get(s, 0) - ranks.get(s + 1, 0)
    return _profile(dims, top)


def _faces_by_size(facets: Iterable[int]) -> dict[int, list[int]]:
    seen: set[int] = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    out: dict[int, list[int]] = {}
    for m in sort_masks(seen):
        out.setdefault(m.bit_count(), []).append(m)
    return out


def _nerve_faces(facets: tuple[int, ...]) -> dict[int, list[int]]:
    """Faces of the nerve of ``facets``: index sets with a common vertex."""
    r = len(facets)
    out: dict[int, list[int]] = {0: [0]}

    def grow(chosen: int, common: int, start: int, size: int) -> None:
        for j in range(start, r):
            inter = common & facets[j]
            if inter:
                nxt = chosen | (1 << j)
                out.setdefault(size + 1, []).append(nxt)
                grow(nxt, inter, j + 1, size + 1)

    grow(0, -1, 0, 0)
    return out


def _direct_cost(facets: tuple[int, ...]) -> int:
    return sum(1 << f.bit_count() for f in facets)


def _small_route_cost(facets: tuple[int, ...]) -> int:
    """Face-count bound for whichever of direct chains or the nerve is smaller."""
    return min(_direct_cost(facets), 1 << min(len(facets), 62))


def _homology_from_facets(facets: tuple[int, ...], field: FieldChoice) -> HomologyProfile:
    """Homology of a complex with at least one nonempty facet."""
    if _direct_cost(facets) <= (1 << min(len(facets), 62)):
        return homology_of_faces(_faces_by_size(facets), field)
    nerve = _nerve_faces(facets)
    return homology_of_faces(nerve, field)


def reduced_homology(cx, field: FieldChoice = QQ) -> HomologyProfile:
    """Reduced homology dimensions of a ``SimplicialComplex``."""
    facets = cx.facets
    if cx.is_empty_complex:
        return HomologyProfile((1,))
    if cx.is_simplex:
        return _profile({}, cx.dim)
    cost = _small_route_cost(facets)
    if cost > DIRECT_FACE_BUDGET:
        nonfaces = cx.minimal_nonfaces
        if _small_route_cost(tuple(cx.vertices & ~g for g in nonfaces)) < cost:
            return _via_alexander_dual(cx, field)
    return _homology_from_facets(facets, field)


def _via_alexander_dual(cx, field: FieldChoice) -> HomologyProfile:
    n = cx.vertices.bit_count()
    dual_facets = tuple(sorted(cx.vertices & ~g for g in cx.minimal_nonfaces))
    if dual_facets == (0,):
        dual = HomologyProfile((1,))
    else:
        dual = _homology_from_facets(dual_facets, field)
    dims = {}
    for j, d in dual.nonzero().items():
        dims[n - j - 3] = d
    return _profile(dims, cx.dim)


def brute_force_homology(cx, field: FieldChoice = QQ) -> HomologyProfile:
    """Chain-level computation with no shortcuts, for testing."""
    return homology_of_faces(_faces_by_size(cx.facets), field)


__all__ = [
    "DEFAULT_PRIME",
    "FieldChoice",
    "HomologyProfile",
    "QQ",
    "brute_force_homology",
    "rank",
    "reduced_homology",
]
