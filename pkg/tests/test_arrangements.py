from fractions import Fraction
from math import comb

import pytest

from netdual.arrangements import (
    LineArrangement,
    NetCandidate,
    RationalLine,
    ceva,
    ceva_coordinates,
    graphic_flats,
    hessian,
    is_isomorphic,
    kn_labels,
    l2_from_coordinates,
)
from netdual.catalog import (
    BRAID_A3_COORDINATES,
    NON_PAPPUS_COORDINATES,
    NON_PAPPUS_TRIPLES,
    PAPPUS_COORDINATES,
    available,
    catalog,
    coordinates,
)
from netdual.core import SimpleGraph, one_based
from netdual.errors import CrossCheckError


def test_rational_line_canonical_form():
    assert RationalLine.of(Fraction(1, 2), -1, 0) == RationalLine(1, -2, 0)
    assert RationalLine.of(-2, 4, 6) == RationalLine(1, -2, -3)
    with pytest.raises(ValueError):
        RationalLine.of(0, 0, 0)
    with pytest.raises(ValueError):
        RationalLine(2, 4, 6)


def test_meet_is_exact():
    x, y = RationalLine.of(1, 0, 0), RationalLine.of(0, 1, 0)
    assert x.meet(y) == (0, 0, 1)
    with pytest.raises(ValueError):
        x.meet(x)


def test_braid_coordinates_give_four_triples():
    lines = [RationalLine.of(*v) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)]]
    arr = l2_from_coordinates(lines)
    assert len(arr.multiple_points) == 4
    assert len(arr.double_points()) == 3
    assert is_isomorphic(arr, catalog("braid-a3")[0])


def test_braid_catalog_coordinates_match_labels_exactly():
    arr = l2_from_coordinates(BRAID_A3_COORDINATES)
    assert arr == catalog("braid-a3")[0]


def test_two_generic_lines():
    arr = l2_from_coordinates([RationalLine.of(1, 0, 0), RationalLine.of(0, 1, 0)])
    assert arr.multiple_points == ()
    assert len(arr.double_points()) == 1


def test_coordinate_errors():
    with pytest.raises(ValueError):
        l2_from_coordinates([RationalLine.of(1, 0, 0)])
    with pytest.raises(ValueError):
        l2_from_coordinates([RationalLine.of(1, 0, 0), RationalLine.of(2, 0, 0)])


def test_ceva_two_is_the_braid_matroid():
    assert is_isomorphic(l2_from_coordinates(ceva_coordinates(2)), catalog("braid-a3")[0])
    assert is_isomorphic(ceva(2)[0], catalog("braid-a3")[0])
    with pytest.raises(ValueError):
        ceva_coordinates(3)


def test_pappus_coordinates_realize_the_catalog_matroid():
    assert is_isomorphic(l2_from_coordinates(PAPPUS_COORDINATES), catalog("pappus")[0])


def test_non_pappus_triples_come_from_coordinates():
    arr = l2_from_coordinates(NON_PAPPUS_COORDINATES)
    assert arr.point_lists() == sorted(NON_PAPPUS_TRIPLES)
    assert len(arr.double_points()) == 9
    assert not is_isomorphic(arr, catalog("pappus")[0])


def test_arrangement_validation():
    with pytest.raises(ValueError):
        LineArrangement.from_lists(4, [[1, 2]])
    with pytest.raises(ValueError):
        LineArrangement.from_lists(5, [[1, 2, 3], [1, 2, 4]])
    with pytest.raises(ValueError):
        LineArrangement.from_lists(3, [[1, 2, 4]])


def test_incidence_conservation_on_catalog():
    for name in ["braid-a3", "pappus", "non-pappus", "hessian", "ceva-2", "ceva-3", "ceva-6"]:
        arr, _ = catalog(name)
        arr.check_incidences()
        total = sum(comb(p.bit_count(), 2) for p in arr.points())
        assert total == comb(arr.n, 2)


def test_incidence_check_detects_inconsistency():
    class Broken(LineArrangement):
        def double_points(self):
            return ()

    with pytest.raises(CrossCheckError):
        Broken.from_lists(4, [[1, 2, 3]]).check_incidences()


def test_graphic_flats():
    k4 = graphic_flats(SimpleGraph.complete(4))
    assert sum(1 for f in k4 if f.bit_count() == 3) == 4
    assert sum(1 for f in k4 if f.bit_count() == 2) == 3
    assert graphic_flats(SimpleGraph.complete(3)) == [0b111]
    path = SimpleGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert sorted(graphic_flats(path)) == sorted([0b011, 0b110, 0b101])


def test_graphic_flats_count_for_complete_graphs():
    for n in range(3, 9):
        flats = graphic_flats(SimpleGraph.complete(n))
        assert sum(1 for f in flats if f.bit_count() == 3) == comb(n, 3)
        assert sum(1 for f in flats if f.bit_count() == 2) == 3 * comb(n, 4)


def test_kn_labels():
    assert kn_labels(4) == ("x12", "x13", "x14", "x23", "x24", "x34")
    assert kn_labels(10)[0] == "x1_2"


def test_ceva_structure():
    arr, c = ceva(3)
    got = {"".join(map(str, one_based(x))) for x in c.X}
    assert got == {"147", "258", "369", "168", "249", "267", "348", "159", "357"}
    assert [p.bit_count() for p in arr.multiple_points].count(3) == 12
    assert arr.double_points() == ()
    for d in range(2, 7):
        arr, c = ceva(d)
        assert len(c.X) == d * d
        assert len(arr.multiple_points) == d * d + (3 if d >= 3 else 0)
    with pytest.raises(ValueError):
        ceva(1)


def test_hessian_structure():
    arr, c = hessian()
    assert arr.n == 12
    assert len(arr.multiple_points) == 9
    assert all(p.bit_count() == 4 for p in arr.multiple_points)
    assert len(arr.double_points()) == 12
    assert (c.k, c.d) == (4, 3)


def test_net_candidate_validation():
    with pytest.raises(ValueError):
        NetCandidate.from_lists([[1, 2], [3, 4]], [])
    with pytest.raises(ValueError):
        NetCandidate.from_lists([[1, 2], [2, 3], [5, 6]], [])
    with pytest.raises(ValueError):
        NetCandidate.from_lists([[1, 4], [2, 5], [3, 6]], [[1], [1, 2, 3]])
    with pytest.raises(ValueError):
        NetCandidate.from_lists([[1, 4], [2, 5], [3, 6]], [[1, 2, 3], [1, 2, 3]])


def test_catalog_lookup():
    arr, c = catalog("braid-a3")
    assert arr.point_lists() == [[1, 2, 3], [1, 5, 6], [2, 4, 6], [3, 4, 5]]
    assert c.describe() == "(3,2) candidate |14|25|36| with |X|=4"
    arr, c = catalog("pappus")
    assert len(arr.double_points()) == 9
    assert catalog("ceva-3") == ceva(3)
    assert catalog("non-pappus")[1] is None
    with pytest.raises(KeyError, match="available"):
        catalog("desargues")
    assert "hessian" in available()
    assert coordinates("hessian") is None
