"""Graded Betti numbers of squarefree monomial ideals via Hochster's formula."""

from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ._bits import submasks
from .core import MonomialIdeal, induced_subcomplex, one_based, sr_complex
from .duality import alexander_dual, codimension
from .errors import CrossCheckError, SizeLimitError
from .homology import QQ, FieldChoice, reduced_homology

MAX_EXHAUSTIVE_VARIABLES = 20

IDEAL = "ideal"
QUOTIENT = "quotient"


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers ``b_{i,m}`` of ``I`` or of ``S/I``.

    ``multigraded`` maps ``(i, m)`` with ``m`` a squarefree support bitmask to
    a positive rank. Zero entries are never stored.
    """

    n: int
    subject: str
    multigraded: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.subject not in (IDEAL, QUOTIENT):
            raise ValueError(f"subject must be {IDEAL!r} or {QUOTIENT!r}")
        if any(v < 0 for v in self.multigraded.values()):
            raise ValueError("Betti numbers are nonnegative")
        clean = {k: v for k, v in sorted(self.multigraded.items()) if v}
        object.__setattr__(self, "multigraded", clean)

    @property
    def graded(self) -> dict[tuple[int, int], int]:
        """``(i, j) -> b_{i,j}`` with ``j`` the total degree."""
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, m), v in self.multigraded.items():
            out[i, m.bit_count()] += v
        return dict(sorted(out.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.graded.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.graded.items() if a == i)

    @property
    def pdim(self) -> int:
        return max((i for i, _ in self.graded), default=-1)

    @property
    def reg(self) -> int:
        return max((j - i for i, j in self.graded), default=0)

    def to_quotient(self) -> BettiTable:
        if self.subject == QUOTIENT:
            return self
        shifted = {(i + 1, m): v for (i, m), v in self.multigraded.items()}
        shifted[0, 0] = 1
        return BettiTable(self.n, QUOTIENT, shifted)

    def to_ideal(self) -> BettiTable:
        if self.subject == IDEAL:
            return self
        shifted = {(i - 1, m): v for (i, m), v in self.multigraded.items() if i > 0}
        return BettiTable(self.n, IDEAL, shifted)

    def as_subject(self, subject: str) -> BettiTable:
        return self.to_quotient() if subject == QUOTIENT else self.to_ideal()

    def rows(self) -> dict[int, list[int]]:
        """Row ``j`` of the table layout holds ``b_{i,i+j}`` for ``i = 0..pdim``."""
        graded = self.graded
        if not graded:
            return {}
        lo = min(j - i for i, j in graded)
        hi = self.reg
        width = self.pdim + 1
        return {r: [graded.get((i, i + r), 0) for i in range(width)] for r in range(lo, hi + 1)}

    def text(self) -> str:
        rows = self.rows()
        if not rows:
            return "(zero table)"
        width = self.pdim + 1
        cells = [["j\\i"] + [str(i) for i in range(width)]]
        for r, vals in rows.items():
            cells.append([str(r)] + [str(v) if v else "--" for v in vals])
        widths = [max([2] * (c > 0) + [len(row[c]) for row in cells]) for c in range(width + 1)]
        lines = []
        for k, row in enumerate(cells):
            head = row[0].rjust(widths[0])
            body = " ".join(x.rjust(w) for x, w in zip(row[1:], widths[1:]))
            lines.append(f"{head} | {body}")
            if k == 0:
                lines.append("-" * len(lines[0]))
        return "\n".join(lines)

    def to_json(self, multigraded: bool = False) -> str:
        if multigraded:
            entries = [
                {"i": i, "j": m.bit_count(), "m": one_based(m), "rank": v}
                for (i, m), v in self.multigraded.items()
            ]
        else:
            entries = [{"i": i, "j": j, "rank": v} for (i, j), v in self.graded.items()]
        return json.dumps({"subject": self.subject, "entries": entries}, sort_keys=True)


def lcm_lattice(ideal: MonomialIdeal) -> list[int]:
    """Nonempty lcms of generator subsets, sorted by support."""
    found: set[int] = set()
    for g in ideal.gens:
        found |= {g | m for m in found}
        found.add(g)
    return sorted(found)


def _betti_at(cx, m: int, field: FieldChoice) -> list[tuple[tuple[int, int], int]]:
    profile = reduced_homology(induced_subcomplex(cx, m), field)
    size = m.bit_count()
    out = []
    for q, d in profile.nonzero().items():
        i = size - q - 2
        if i >= 0:
            out.append(((i, m), d))
    return out


def hochster_betti(
    ideal: MonomialIdeal,
    field: FieldChoice = QQ,
    exhaustive: bool = False,
    threads: int = 1,
) -> BettiTable:
    """Multigraded Betti numbers of the ideal (not the quotient).

    ``b_{i,m}(I) = dim H~_{|m|-i-2}(D_m)`` with ``D`` the Stanley-Reisner
    complex of ``I``. Only lcms of generator subsets can carry nonzero
    values; ``exhaustive=True`` sweeps every squarefree multidegree instead.
    """
    if ideal.is_zero:
        return BettiTable(ideal.n, IDEAL, {})
    cx = sr_complex(ideal)
    if exhaustive:
        if ideal.n > MAX_EXHAUSTIVE_VARIABLES:
            raise SizeLimitError(
                f"exhaustive sweep over 2^{ideal.n} multidegrees refused "
                f"(cap {MAX_EXHAUSTIVE_VARIABLES} variables)"
            )
        degrees = sorted(m for m in submasks(ideal.ground.full) if m)
    else:
        degrees = lcm_lattice(ideal)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda m: _betti_at(cx, m, field), degrees))
    else:
        parts = [_betti_at(cx, m, field) for m in degrees]
    table: dict[tuple[int, int], int] = {}
    for part in parts:
        for key, d in part:
            table[key] = table.get(key, 0) + d
    return BettiTable(ideal.n, IDEAL, table)


def betti_table(
    ideal: MonomialIdeal,
    subject: str = IDEAL,
    field: FieldChoice = QQ,
    exhaustive: bool = False,
    threads: int = 1,
) -> BettiTable:
    return hochster_betti(ideal, field, exhaustive, threads).as_subject(subject)


def has_linear_resolution(ideal: MonomialIdeal, field: FieldChoice = QQ) -> bool:
    degrees = ideal.degrees()
    if len(degrees) != 1:
        return False
    t = degrees[0]
    table = hochster_betti(ideal, field)
    return all(j == i + t for i, j in table.graded)


def is_cohen_macaulay(ideal: MonomialIdeal, field: FieldChoice = QQ) -> bool:
    """Whether ``S/I`` is Cohen-Macaulay.

    Compares projective dimension with codimension, and when the Alexander
    dual is generated in one degree also asks whether it has a linear
    resolution (Eagon-Reiner). The two answers must agree.
    """
    if ideal.is_zero:
        return True
    pdim = hochster_betti(ideal, field).to_quotient().pdim
    by_codim = pdim == codimension(ideal)
    dual = alexander_dual(ideal)
    if len(dual.degrees()) == 1:
        by_dual = has_linear_resolution(dual, field)
        if by_dual != by_codim:
            raise CrossCheckError(
                f"Cohen-Macaulay routes disagree for {ideal}: "
                f"pdim=codim gives {by_codim}, linear dual gives {by_dual}"
            )
    return by_codim
