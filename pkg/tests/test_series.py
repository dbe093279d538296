import random
from math import comb

import pytest
from hypothesis import given, settings

from netdual.core import GroundSet, MonomialIdeal, minimalize, monomial, simplex, sr_complex
from netdual.duality import alexander_dual
from netdual.monomial_os import kn_ideal, quadratic_part
from netdual.resolutions import betti_table, hochster_betti
from netdual.series import (
    HilbertSeries,
    IntPolynomial,
    cut_coefficient,
    cut_polynomial,
    f_formula_Kn,
    f_polynomial,
    f_vector,
    f_vector_by_enumeration,
    h_polynomial,
    hilbert_numerator,
    hilbert_series,
    k_polynomial_from_betti,
    kn_cut_c2,
    kn_cut_c3,
    kn_dual_kpoly_closed_form,
    kn_hilbert_closed_form,
    linear_strand,
    standard_monomial_count,
)

from conftest import random_ideal, squarefree_ideals

P = IntPolynomial


def test_polynomial_arithmetic():
    a = P((1, 2))
    b = P((0, 1))
    assert (a * b).coeffs == (0, 1, 2)
    assert (a - a).coeffs == ()
    assert P.one_minus_t(3).coeffs == (1, -3, 3, -1)
    assert P((1, 0, 1)).compose_shift(-1).coeffs == (2, -2, 1)
    assert P((1, -1)).divide_one_minus_t().coeffs == (1,)
    assert P((1, 1)).divide_one_minus_t() is None
    assert P((3, 0, -1)).format() == "3-t^2"
    assert P((3, 0, -1)).format("x", descending=True, spaced=True) == "-x^2 + 3"


def test_hilbert_series_equality_is_rational():
    a = HilbertSeries(P((1,)), 1)
    b = HilbertSeries(P((1, -1)), 2)
    assert a == b
    assert b.reduced() == a and b.reduced().denominator_power == 1
    assert a.with_denominator(3).numerator == P((1, -2, 1))
    assert a.coefficients(4) == [1, 1, 1, 1, 1]


def test_f_polynomials():
    assert f_polynomial(sr_complex(kn_ideal(7))) == P((7, 42, 105, 140, 105, 21, 1))
    assert f_polynomial(sr_complex(kn_ideal(4))) == P((4, 12, 6, 1))
    assert f_polynomial(simplex(GroundSet(4))) == P(tuple(comb(4, i) for i in range(4, -1, -1)))


def test_kn_f_formula():
    assert f_formula_Kn(3) == P((3, 3, 1))
    for n in range(3, 8):
        assert f_formula_Kn(n) == f_polynomial(sr_complex(kn_ideal(n)))


@given(squarefree_ideals(max_vars=8, max_gens=6))
def test_f_vector_routes_agree(I):
    cx = sr_complex(I)
    assert f_vector(cx) == f_vector_by_enumeration(cx)


def test_h_polynomial_and_numerator():
    cx = sr_complex(kn_ideal(4))
    assert h_polynomial(cx) == P((-3, 3, 3, 1))
    hs = hilbert_numerator(cx)
    assert hs.numerator == P((1, 3, 3, -3)) and hs.denominator_power == 3
    three = hilbert_numerator(sr_complex(kn_ideal(3)))
    assert three.numerator == P((1, 1, 1)) and three.denominator_power == 2
    full = hilbert_numerator(simplex(GroundSet(5)))
    assert full.numerator == P((1,)) and full.denominator_power == 5


def test_kn_closed_forms():
    assert kn_hilbert_closed_form(4).numerator == P((1, 3, 3, -3))
    for n in range(3, 8):
        assert hilbert_series(kn_ideal(n)) == kn_hilbert_closed_form(n)
    d7 = kn_dual_kpoly_closed_form(7)
    assert d7.numerator == P.from_terms({0: 1, 15: -7, 20: 21, 21: -15})
    assert d7.denominator_power == 21
    assert kn_dual_kpoly_closed_form(3) == HilbertSeries(P.one_minus_t(3), 3)


def test_kn_dual_matches_betti_alternating_sum():
    for n in range(3, 8):
        D = alexander_dual(kn_ideal(n))
        kp = k_polynomial_from_betti(betti_table(D))
        assert kp.numerator == kn_dual_kpoly_closed_form(n).numerator
        assert kp == hilbert_series(D)


def test_reduced_denominator_identity_for_k7():
    lhs = P.from_terms({0: 1, 15: -7, 20: 21, 21: -15})
    rhs = P(tuple(range(1, 16)) + (9, 3, -3, -9, -15))
    assert lhs == rhs * P.one_minus_t(2)


def test_k_polynomial_examples():
    I = minimalize(GroundSet(4), [monomial(2, 4), monomial(1, 2, 3), monomial(1, 3, 4)])
    kp = k_polynomial_from_betti(betti_table(I))
    assert kp.numerator == P((1, 0, -1, -2, 2)) and kp.denominator_power == 4
    zero = k_polynomial_from_betti(betti_table(MonomialIdeal(GroundSet(3), ())))
    assert zero.numerator == P((1,)) and zero.denominator_power == 3


@settings(max_examples=40)
@given(squarefree_ideals(max_vars=7, max_gens=5))
def test_hilbert_series_matches_monomial_counts(I):
    hs = hilbert_series(I)
    coeffs = hs.coefficients(6)
    for deg in range(7):
        assert coeffs[deg] == standard_monomial_count(I, deg)


@settings(max_examples=40)
@given(squarefree_ideals(max_vars=8, max_gens=6))
def test_k_polynomial_reduces_to_face_count_series(I):
    kp = k_polynomial_from_betti(betti_table(I))
    hs = hilbert_series(I)
    assert kp.with_denominator(hs.denominator_power) == hs


CUT_ROWS = {
    4: [3],
    5: [15, 30, 10],
    6: [45, 210, 390, 285, 100, 15],
    7: [105, 840, 3150, 6510, 7497, 5565, 2835, 980, 210, 21],
}


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_cut_polynomial_table(n):
    c = cut_polynomial(quadratic_part(kn_ideal(n)))
    assert list(c.coeffs[2:]) == CUT_ROWS[n]
    assert all(c[j] == 0 for j in range(comb(n - 2, 2) + 2, c.degree + 2))


def test_cut_polynomial_accepts_complex_or_ideal():
    I = quadratic_part(kn_ideal(5))
    assert cut_polynomial(sr_complex(I)) == cut_polynomial(I)


def test_cut_polynomial_rejects_non_quadratic():
    with pytest.raises(ValueError):
        cut_polynomial(kn_ideal(4))


def test_c2_c3_formulas():
    for n in range(4, 11):
        I = quadratic_part(kn_ideal(n))
        assert cut_coefficient(I, 2) == kn_cut_c2(n)
        assert cut_coefficient(I, 3) == kn_cut_c3(n)


def test_linear_strand_small():
    assert linear_strand(minimalize(GroundSet(2), [monomial(1, 2)])) == {1: 1}
    assert linear_strand(quadratic_part(kn_ideal(4))) == {1: 3}
    assert linear_strand(quadratic_part(kn_ideal(5))) == {1: 15, 2: 30, 3: 10}


def test_linear_strand_matches_hochster_on_random_graphs():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(2, 10)
        I = random_ideal(rng, n, max_gens=12, max_degree=2)
        if any(g.bit_count() != 2 for g in I.gens):
            continue
        table = hochster_betti(I).to_quotient()
        strand = {i: b for (i, j), b in table.graded.items() if j == i + 1}
        assert linear_strand(I) == strand
