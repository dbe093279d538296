import pytest
from hypothesis import given

from netdual.core import GroundSet, SimplicialComplex, minimalize, monomial, sr_complex
from netdual.homology import (
    DEFAULT_PRIME,
    QQ,
    FieldChoice,
    brute_force_homology,
    rank,
    reduced_homology,
)

from conftest import squarefree_ideals


def cx_of(n, facets):
    return SimplicialComplex(GroundSet(n), tuple(monomial(*f) for f in facets))


def test_field_parsing():
    assert FieldChoice.parse("q") == QQ
    assert FieldChoice.parse("gf:7").p == 7
    assert FieldChoice.parse("gf").p == DEFAULT_PRIME
    with pytest.raises(ValueError):
        FieldChoice.parse("gf:8")
    with pytest.raises(ValueError):
        FieldChoice.parse("zz")


def test_rank_over_fields():
    rows = [{0: 2, 1: 2}, {0: 1, 1: 1}]
    assert rank(rows, QQ) == 1
    rows = [{0: 2}, {1: 3}]
    assert rank(rows, FieldChoice(2)) == 1
    assert rank(rows, QQ) == 2


def test_two_hollow_triangles():
    cx = cx_of(4, [[1, 2], [1, 3], [1, 4], [2, 3], [3, 4]])
    h = reduced_homology(cx)
    assert h.nonzero() == {1: 2}


def test_circle_sphere_and_points():
    assert reduced_homology(cx_of(3, [[1, 2], [2, 3], [1, 3]])).nonzero() == {1: 1}
    assert reduced_homology(cx_of(3, [[1], [2], [3]])).nonzero() == {0: 2}
    tetra_boundary = cx_of(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
    assert reduced_homology(tetra_boundary).nonzero() == {2: 1}
    assert reduced_homology(cx_of(3, [[1, 2, 3]])).nonzero() == {}


def test_void_complex_has_degree_minus_one_class():
    I = minimalize(GroundSet(2), [monomial(1), monomial(2)])
    assert reduced_homology(sr_complex(I)).nonzero() == {-1: 1}


def test_projective_plane_torsion_shows_in_char_two():
    # six-vertex triangulation of RP^2
    facets = [
        [1, 2, 4], [1, 3, 4], [1, 3, 5], [1, 2, 6], [1, 5, 6],
        [2, 3, 5], [2, 4, 5], [2, 3, 6], [3, 4, 6], [4, 5, 6],
    ]
    cx = cx_of(6, facets)
    assert reduced_homology(cx, QQ).nonzero() == {}
    assert reduced_homology(cx, FieldChoice(2)).nonzero() == {1: 1, 2: 1}


@given(squarefree_ideals(max_vars=8, max_gens=6))
def test_shortcuts_match_brute_force(I):
    cx = sr_complex(I)
    if cx.is_empty_complex:
        return
    assert reduced_homology(cx).nonzero() == brute_force_homology(cx).nonzero()


@given(squarefree_ideals(max_vars=8, max_gens=6))
def test_euler_characteristic_matches_face_count(I):
    cx = sr_complex(I)
    if cx.is_empty_complex:
        return
    chi = sum((-1) ** (f.bit_count() - 1) for f in cx.faces())
    assert reduced_homology(cx).euler_characteristic() == chi
