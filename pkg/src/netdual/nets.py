"""Net detection for line arrangements.

Two independent tests decide whether a candidate ``(blocks, X)`` is a net:

* direct: every pair of lines from different blocks meets in a point of
  ``X``, and each point of ``X`` carries exactly one line of every block;
* dual: the degree-``d`` part of the Alexander dual of ``J_X`` equals the
  degree-``d`` part of ``J_Pi``, the ideal of the block products.

Both ideals are monomial, so the degree-``d`` comparison is a comparison of
monomial sets once no dual generator of lower degree exists.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb

from ._bits import indices_of
from .arrangements import LineArrangement, NetCandidate
from .core import one_based
from .duality import alexander_dual
from .errors import CrossCheckError
from .monomial_os import build_J, j_pi, j_x, quadratic_part

DIRECT = "direct"
DUAL = "dual"


@dataclass(frozen=True)
class NetVerdict:
    """Outcome of one net test. ``certificate`` explains a failure."""

    is_net: bool
    criterion: str
    certificate: dict | None = None

    def __post_init__(self):
        if self.is_net != (self.certificate is None):
            raise ValueError("a certificate is required exactly when the test fails")

    def reason(self) -> str:
        c = self.certificate
        if c is None:
            return "PASS"
        kind = c["kind"]
        if kind == "uncovered-pair":
            a, b = c["lines"]
            return f"lines {a} and {b} from different blocks do not meet in X"
        if kind == "bad-point":
            return f"point {c['point']} does not carry exactly one line of each block"
        if kind == "low-degree-dual":
            return f"dual has {c['count']} generator(s) of degree < d, e.g. {c['example']}"
        if kind == "degree-d-mismatch":
            return (
                f"degree-d dual generators {c['dual']} differ from the blocks {c['blocks']}"
            )
        return kind


def net_check_direct(arr: LineArrangement, c: NetCandidate) -> NetVerdict:
    if arr.n != c.n:
        raise ValueError(f"arrangement has {arr.n} lines, candidate covers {c.n}")
    if c.k not in (3, 4):
        warnings.warn(f"k={c.k}: genuine nets have k in {{3, 4}}", stacklevel=2)
    for x in c.X:
        if not arr.is_flat(x):
            raise ValueError(f"X member {one_based(x)} is not a point of the arrangement")
    for x in c.X:
        if x.bit_count() != c.k or any((x & b).bit_count() != 1 for b in c.blocks):
            return NetVerdict(False, DIRECT, {"kind": "bad-point", "point": one_based(x)})
    for a, b in combinations(range(c.n), 2):
        if c.block_of(a) == c.block_of(b):
            continue
        pair = (1 << a) | (1 << b)
        if not any(x & pair == pair for x in c.X):
            return NetVerdict(False, DIRECT, {"kind": "uncovered-pair", "lines": [a + 1, b + 1]})
    if len(c.X) != c.d**2:
        raise CrossCheckError(f"net with |X|={len(c.X)} != d^2={c.d**2}")
    for line in range(c.n):
        on = sum(1 for x in c.X if x >> line & 1)
        if on != c.d:
            raise CrossCheckError(f"line {line + 1} meets X in {on} points, not d={c.d}")
    return NetVerdict(True, DIRECT)


def net_check_dual(c: NetCandidate) -> NetVerdict:
    if not c.X:
        raise ValueError("X is empty; the dual criterion needs at least one point")
    dual = alexander_dual(j_x(c))
    low = [g for g in dual.gens if g.bit_count() < c.d]
    if low:
        return NetVerdict(
            False,
            DUAL,
            {"kind": "low-degree-dual", "count": len(low), "example": one_based(low[0])},
        )
    dual_d = sorted(g for g in dual.gens if g.bit_count() == c.d)
    blocks = sorted(j_pi(c).gens)
    if dual_d != blocks:
        return NetVerdict(
            False,
            DUAL,
            {
                "kind": "degree-d-mismatch",
                "dual": [one_based(g) for g in dual_d],
                "blocks": [one_based(b) for b in blocks],
            },
        )
    return NetVerdict(True, DUAL)


def net_check(arr: LineArrangement, c: NetCandidate) -> tuple[NetVerdict, NetVerdict]:
    """Run both tests; ``(dual, direct)``. Disagreement raises ``CrossCheckError``."""
    dual = net_check_dual(c)
    direct = net_check_direct(arr, c)
    if dual.is_net != direct.is_net:
        raise CrossCheckError(
            f"net criteria disagree on {c.describe()}: "
            f"dual {'PASS' if dual.is_net else 'FAIL'} ({dual.reason()}), "
            f"direct {'PASS' if direct.is_net else 'FAIL'} ({direct.reason()})"
        )
    return dual, direct


def blocks_normal_crossing(arr: LineArrangement, c: NetCandidate) -> bool:
    """Whether lines inside each block meet only in double points.

    Decided from the quadrics of ``J`` (all within-block pairs, nothing
    across blocks) and, independently, from the multiple points (none holds
    two lines of one block).
    """
    if not net_check_direct(arr, c).is_net:
        raise ValueError(f"{c.describe()} is not a net")
    quads = set(quadratic_part(build_J(arr)).gens)
    within = {(1 << a) | (1 << b) for blk in c.blocks for a, b in combinations(indices_of(blk), 2)}
    by_quadrics = quads == within
    by_points = not any(
        (p & b).bit_count() >= 2 for p in arr.multiple_points for b in c.blocks
    )
    if by_quadrics != by_points:
        raise CrossCheckError("normal-crossing routes disagree")
    return by_quadrics


def within_block_mu_sum(arr: LineArrangement, c: NetCandidate) -> int:
    """``sum mu(p)`` over the intersection points not in ``X``."""
    xs = set(c.X)
    return sum(arr.mu(p) for p in arr.points() if p not in xs)


def fy_slack(k: int, d: int, X_size: int, mu_sum: int) -> int:
    """``(3 + |X|) - ((2-k)(3d-d^2) + 2kd - mu_sum)``; zero means the blocks are the only singular fibers."""
    if k < 3 or d < 2:
        raise ValueError("need k >= 3 and d >= 2")
    return (3 + X_size) - ((2 - k) * (3 * d - d * d) + 2 * k * d - mu_sum)


def extra_fibers_required(c: NetCandidate) -> bool:
    """For a net whose blocks cross normally: must the pencil have more singular fibers?"""
    slack = fy_slack(c.k, c.d, c.d**2, c.k * comb(c.d, 2))
    if slack < 0:
        raise ValueError(f"no ({c.k},{c.d}) net with normal-crossing blocks can exist")
    verdict = (c.k, c.d) not in ((3, 2), (4, 3))
    if verdict != (slack > 0):
        raise CrossCheckError(f"slack {slack} contradicts the (k,d) = ({c.k},{c.d}) classification")
    return verdict
