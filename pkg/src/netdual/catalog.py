"""Built-in arrangements.

``braid-a3``
    Six lines ``x_i - x_j`` in the quotient of C^4 by the diagonal, numbered
    as the K_4 edges 12, 23, 13, 34, 14, 24. Net ``|14|25|36|``.
``pappus``
    The nine triple points read off the cubic generators ``x1x2x7, x1x3x5,
    ...``; net ``|169|258|347|``.
``non-pappus``
    Nine lines with nine triple points and no net. Derived from the rational
    realization in ``NON_PAPPUS_COORDINATES``; the triple list is recomputed
    from those equations in the test suite.
``ceva-d``
    The Ceva (3,d) net for any ``d >= 2``.
``hessian``
    The (4,3) Hesse net, derived combinatorially from the affine plane over
    GF(3) (its coordinates need cube roots of unity).
"""

from __future__ import annotations

from .arrangements import (
    LineArrangement,
    NetCandidate,
    RationalLine,
    ceva,
    hessian,
)

BRAID_A3_TRIPLES = [[1, 2, 3], [1, 5, 6], [2, 4, 6], [3, 4, 5]]
BRAID_A3_BLOCKS = [[1, 4], [2, 5], [3, 6]]
BRAID_A3_COORDINATES = [
    RationalLine.of(1, -1, 0),
    RationalLine.of(0, 1, -1),
    RationalLine.of(1, 0, -1),
    RationalLine.of(0, 0, 1),
    RationalLine.of(1, 0, 0),
    RationalLine.of(0, 1, 0),
]

PAPPUS_TRIPLES = [
    [1, 2, 7], [1, 3, 5], [1, 4, 8], [2, 3, 9], [2, 4, 6],
    [3, 6, 8], [4, 5, 9], [5, 6, 7], [7, 8, 9],
]
PAPPUS_BLOCKS = [[1, 6, 9], [2, 5, 8], [3, 4, 7]]
# a rational Pappus realization; its line numbering differs from PAPPUS_TRIPLES
PAPPUS_COORDINATES = [
    RationalLine.of(*v)
    for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (0, 1, -1),
              (1, -1, -1), (2, 1, 1), (2, 1, -1), (-2, 5, -1)]
]

NON_PAPPUS_COORDINATES = [
    RationalLine.of(*v)
    for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1),
              (1, 0, 3), (1, 2, 1), (1, 2, 3), (2, 3, 3)]
]
NON_PAPPUS_TRIPLES = [
    [1, 2, 4], [1, 3, 6], [1, 5, 9], [2, 3, 5], [2, 6, 8],
    [3, 7, 8], [4, 5, 7], [4, 8, 9], [6, 7, 9],
]


def available() -> list[str]:
    return ["braid-a3", "pappus", "non-pappus", "ceva-<d>", "hessian"]


def catalog(name: str) -> tuple[LineArrangement, NetCandidate | None]:
    key = name.strip().lower()
    if key == "braid-a3":
        return (
            LineArrangement.from_lists(6, BRAID_A3_TRIPLES),
            NetCandidate.from_lists(BRAID_A3_BLOCKS, BRAID_A3_TRIPLES),
        )
    if key == "pappus":
        return (
            LineArrangement.from_lists(9, PAPPUS_TRIPLES),
            NetCandidate.from_lists(PAPPUS_BLOCKS, PAPPUS_TRIPLES),
        )
    if key == "non-pappus":
        return LineArrangement.from_lists(9, NON_PAPPUS_TRIPLES), None
    if key == "hessian":
        return hessian()
    if key.startswith("ceva-"):
        try:
            d = int(key[5:])
        except ValueError:
            d = None
        if d is not None:
            return ceva(d)
    raise KeyError(f"unknown catalog entry {name!r}; available: {', '.join(available())}")


def coordinates(name: str) -> list[RationalLine] | None:
    """Rational equations for an entry, when it has a rational realization."""
    return {
        "braid-a3": BRAID_A3_COORDINATES,
        "pappus": PAPPUS_COORDINATES,
        "non-pappus": NON_PAPPUS_COORDINATES,
    }.get(name.strip().lower())
