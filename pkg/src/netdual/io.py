"""Readers for the input file formats. All line and vertex numbers are 1-based.

* arrangement JSON: ``{"n": 6, "multiple_points": [[1, 2, 3], ...]}``
* coordinates: one line ``a b c`` per line of the arrangement, entries
  integers or fractions such as ``-3/2``
* graph: the vertex count on the first line, then one ``u v`` edge per line
* net candidate JSON: ``{"blocks": [[1, 4], ...], "X": [[1, 2, 3], ...]}``
* ideal JSON: ``{"n": 4, "generators": [[1, 2], [2, 3, 4]]}``

In the text formats blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path

from .arrangements import LineArrangement, NetCandidate, RationalLine
from .core import GroundSet, MonomialIdeal, SimpleGraph, minimalize, monomial
from .errors import ParseError


def _text(source: str | Path) -> tuple[str, str]:
    path = Path(source)
    try:
        return path.read_text(), str(path)
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", source=str(path)) from None


def _content_lines(text: str) -> Iterator[tuple[int, str, int]]:
    """``(line number, stripped content, column of first character)``."""
    for k, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield k, body.strip(), len(body) - len(body.lstrip()) + 1


def _load_json(text: str, where: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, where) from None


def _index_lists(value, key: str, where: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(v, list) for v in value):
        raise ParseError(f'"{key}" must be a list of lists of line numbers', source=where)
    for v in value:
        if not all(isinstance(i, int) and not isinstance(i, bool) and i >= 1 for i in v):
            raise ParseError(f'"{key}" entry {v} must hold positive integers', source=where)
    return value


def _count(data: dict, key: str, where: str) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ParseError(f'"{key}" must be a positive integer', source=where)
    return value


def _object(data, keys: tuple[str, ...], where: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", source=where)
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f"missing key {missing[0]!r}", source=where)
    return data


def parse_arrangement_json(text: str, where: str = "<arrangement>") -> LineArrangement:
    data = _object(_load_json(text, where), ("n", "multiple_points"), where)
    n = _count(data, "n", where)
    points = _index_lists(data["multiple_points"], "multiple_points", where)
    try:
        return LineArrangement.from_lists(n, points)
    except ValueError as exc:
        raise ParseError(str(exc), source=where) from None


def parse_coordinates(text: str, where: str = "<coordinates>") -> list[RationalLine]:
    lines = []
    for lineno, body, col in _content_lines(text):
        parts = body.split()
        if len(parts) != 3:
            raise ParseError(f"expected 3 coefficients, found {len(parts)}", lineno, col, where)
        values = []
        offset = 0
        for part in parts:
            pos = body.index(part, offset)
            offset = pos + len(part)
            try:
                values.append(Fraction(part))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"{part!r} is not an integer or fraction", lineno, col + pos, where) from None
        try:
            lines.append(RationalLine.of(*values))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, col, where) from None
    if not lines:
        raise ParseError("no lines found", source=where)
    return lines


def parse_graph(text: str, where: str = "<graph>") -> SimpleGraph:
    rows = list(_content_lines(text))
    if not rows:
        raise ParseError("empty graph file", source=where)
    lineno, body, col = rows[0]
    try:
        n = int(body)
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {body!r}", lineno, col, where) from None
    if n < 1:
        raise ParseError("vertex count must be positive", lineno, col, where)
    edges = []
    for lineno, body, col in rows[1:]:
        parts = body.split()
        if len(parts) != 2:
            raise ParseError("expected an edge 'u v'", lineno, col, where)
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer vertex in {body!r}", lineno, col, where) from None
        for w in (u, v):
            if not 1 <= w <= n:
                raise ParseError(f"vertex {w} outside 1..{n}", lineno, col, where)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, col, where)
        edges.append((u - 1, v - 1))
    try:
        return SimpleGraph(n, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc), source=where) from None


def parse_net_json(text: str, where: str = "<net>") -> NetCandidate:
    data = _object(_load_json(text, where), ("blocks", "X"), where)
    blocks = _index_lists(data["blocks"], "blocks", where)
    X = _index_lists(data["X"], "X", where)
    try:
        return NetCandidate.from_lists(blocks, X)
    except ValueError as exc:
        raise ParseError(str(exc), source=where) from None


def parse_ideal_json(text: str, where: str = "<ideal>") -> MonomialIdeal:
    data = _object(_load_json(text, where), ("n", "generators"), where)
    n = _count(data, "n", where)
    gens = _index_lists(data["generators"], "generators", where)
    try:
        ground = GroundSet(n)
        return minimalize(ground, (monomial(*g) for g in gens))
    except ValueError as exc:
        raise ParseError(str(exc), source=where) from None


def read_arrangement(path: str | Path) -> LineArrangement:
    return parse_arrangement_json(*_text(path))


def read_coordinates(path: str | Path) -> list[RationalLine]:
    return parse_coordinates(*_text(path))


def read_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(*_text(path))


def read_net(path: str | Path) -> NetCandidate:
    return parse_net_json(*_text(path))


def read_ideal(path: str | Path) -> MonomialIdeal:
    return parse_ideal_json(*_text(path))


def arrangement_to_json(arr: LineArrangement) -> str:
    return json.dumps({"n": arr.n, "multiple_points": arr.point_lists()})


def ideal_to_json(ideal: MonomialIdeal) -> str:
    return json.dumps({"n": ideal.n, "generators": ideal.as_lists()})
