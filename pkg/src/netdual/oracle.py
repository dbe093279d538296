"""Brute-force Tor computation, used to validate Hochster's formula.

``Tor_i(S/I, k)_m`` is the homology of the Koszul complex on all variables
tensored with ``S/I``, taken one squarefree multidegree ``m`` at a time. In
multidegree ``m`` the chains of degree ``i`` are ``e_A (x) x^(m - A)`` with
``|A| = i`` and ``x^(m - A)`` a nonzero standard monomial of ``S/I``.
Ranks use dense Gaussian elimination over ``Fraction`` (or mod p), kept
separate from the sparse routine the main path uses.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ._bits import indices_of, mask_of, submasks
from .core import MonomialIdeal
from .errors import SizeLimitError
from .homology import QQ, FieldChoice
from .resolutions import IDEAL, BettiTable

MAX_ORACLE_VARIABLES = 12


def _dense_rank(matrix: list[list[int]], p: int) -> int:
    if not matrix or not matrix[0]:
        return 0
    if p:
        rows = [[x % p for x in row] for row in matrix]
    else:
        rows = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                if p:
                    f = rows[k][c] * pow(lead, -1, p) % p
                    rows[k] = [(a - f * b) % p for a, b in zip(rows[k], rows[r])]
                else:
                    f = rows[k][c] / lead
                    rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def _in_ideal(gens: tuple[int, ...], support: int) -> bool:
    return any(g & support == g for g in gens)


def _tor_at(gens: tuple[int, ...], m: int, p: int) -> dict[int, int]:
    """``dim Tor_i(S/I)_m`` for every ``i``."""
    verts = indices_of(m)
    chains: dict[int, list[int]] = {}
    for i in range(len(verts) + 1):
        chains[i] = [
            a
            for a in (mask_of(c) for c in combinations(verts, i))
            if not _in_ideal(gens, m & ~a)
        ]
    ranks = {}
    for i in range(1, len(verts) + 1):
        target = {a: k for k, a in enumerate(chains[i - 1])}
        if not chains[i] or not target:
            ranks[i] = 0
            continue
        matrix = []
        for a in chains[i]:
            col = [0] * len(target)
            for pos, v in enumerate(indices_of(a)):
                face = a & ~(1 << v)
                k = target.get(face)
                if k is not None:
                    col[k] += -1 if pos % 2 else 1
            matrix.append(col)
        ranks[i] = _dense_rank(matrix, p)
    out = {}
    for i, cs in chains.items():
        h = len(cs) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def koszul_tor_oracle(ideal: MonomialIdeal, field: FieldChoice = QQ) -> BettiTable:
    """Betti numbers of the ideal computed from Koszul homology of ``S/I``."""
    if ideal.n > MAX_ORACLE_VARIABLES:
        raise SizeLimitError(
            f"Koszul oracle refuses {ideal.n} variables (cap {MAX_ORACLE_VARIABLES}); "
            "its cost grows like 3^n"
        )
    table = {}
    for m in submasks(ideal.ground.full):
        if m == 0:
            continue
        for i, h in _tor_at(ideal.gens, m, field.p).items():
            if i >= 1:
                table[i - 1, m] = h
    return BettiTable(ideal.n, IDEAL, table)
