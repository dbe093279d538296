import pytest

from netdual.arrangements import RationalLine
from netdual.errors import ParseError
from netdual.io import (
    arrangement_to_json,
    ideal_to_json,
    parse_arrangement_json,
    parse_coordinates,
    parse_graph,
    parse_ideal_json,
    parse_net_json,
    read_arrangement,
)


def test_arrangement_json_round_trip():
    text = '{"n": 6, "multiple_points": [[1, 2, 3], [1, 5, 6], [2, 4, 6], [3, 4, 5]]}'
    arr = parse_arrangement_json(text)
    assert parse_arrangement_json(arrangement_to_json(arr)) == arr


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_arrangement_json('{"n": 6,\n  "multiple_points": [[1, 2 3]]}', "a.json")
    assert info.value.line == 2
    assert info.value.column is not None
    assert str(info.value).startswith("a.json:2:")


def test_json_schema_errors():
    with pytest.raises(ParseError, match="missing key"):
        parse_arrangement_json('{"n": 6}')
    with pytest.raises(ParseError, match="positive integer"):
        parse_arrangement_json('{"n": 0, "multiple_points": []}')
    with pytest.raises(ParseError, match="share two lines"):
        parse_arrangement_json('{"n": 5, "multiple_points": [[1,2,3],[1,2,4]]}')
    with pytest.raises(ParseError):
        parse_arrangement_json('[1, 2]')


def test_coordinates():
    lines = parse_coordinates("# braid\n1 -1 0\n0 1 -1\n\n1/2 0 -1/2  # scaled\n")
    assert lines == [RationalLine(1, -1, 0), RationalLine(0, 1, -1), RationalLine(1, 0, -1)]


def test_coordinate_errors_point_at_token():
    with pytest.raises(ParseError) as info:
        parse_coordinates("1 0 0\n  0 x 1\n")
    assert (info.value.line, info.value.column) == (2, 5)
    with pytest.raises(ParseError, match="expected 3"):
        parse_coordinates("1 0\n")
    with pytest.raises(ParseError):
        parse_coordinates("0 0 0\n")
    with pytest.raises(ParseError, match="no lines"):
        parse_coordinates("# nothing\n")


def test_graph_file():
    g = parse_graph("4\n1 2\n2 3\n3 4\n")
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    with pytest.raises(ParseError) as info:
        parse_graph("3\n1 4\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_graph("x\n")
    with pytest.raises(ParseError):
        parse_graph("3\n1 2\n2 1\n")


def test_net_json():
    c = parse_net_json('{"blocks": [[1,4],[2,5],[3,6]], "X": [[1,2,3],[1,5,6]]}')
    assert (c.k, c.d, len(c.X)) == (3, 2, 2)
    with pytest.raises(ParseError):
        parse_net_json('{"blocks": [[1,4],[2,5]], "X": []}')


def test_ideal_json():
    I = parse_ideal_json('{"n": 4, "generators": [[2,4],[1,2,3],[1,3,4],[1,2,3,4]]}')
    assert I.as_lists() == [[2, 4], [1, 2, 3], [1, 3, 4]]
    assert parse_ideal_json(ideal_to_json(I)) == I
    with pytest.raises(ParseError):
        parse_ideal_json('{"n": 2, "generators": [[3]]}')
    with pytest.raises(ParseError):
        parse_ideal_json('{"n": 2, "generators": [[]]}')


def test_missing_file(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        read_arrangement(tmp_path / "nope.json")
