from fractions import Fraction

import pytest

from ramanujan_vf.errors import InsufficientPrecision, NonIntegralCoefficient, NotModularOfWeight
from ramanujan_vf.graded import GradedPoly, fields
from ramanujan_vf.modforms import (
    compute_AB,
    reduce_mod_p,
    series_to_poly,
    verify_congruences,
    verify_diff_relations,
    weight_basis,
    weight_form,
)
from ramanujan_vf.qseries import QSeries, eisenstein, phi_eval

e2, e4, e6 = GradedPoly.gens()


@pytest.mark.parametrize("nu,expected", [(8, ((2, 0),)), (12, ((3, 0), (0, 2))), (14, ((2, 1),))])
def test_weight_basis(nu, expected):
    assert weight_basis(nu).exponents == expected


def test_weight_basis_dimension():
    # dim M_k = floor(k/12) + (0 if k = 2 mod 12 else 1)
    for k in range(4, 200, 2):
        assert len(weight_basis(k)) == k // 12 + (0 if k % 12 == 2 else 1)


def test_series_to_poly_examples():
    assert series_to_poly(eisenstein(10, 8), 10) == e4 * e6
    assert series_to_poly(eisenstein(8, 8), 8) == e4**2
    E12 = series_to_poly(eisenstein(12, 8), 12)
    assert E12 == (e4**3 * 441 + e6**2 * 250) / 691
    # independent check: expand back
    assert phi_eval(E12, 8) == eisenstein(12, 8)


def test_series_to_poly_errors():
    with pytest.raises(InsufficientPrecision):
        series_to_poly(eisenstein(12, 3), 12)
    with pytest.raises(NotModularOfWeight):
        series_to_poly(eisenstein(2, 12), 4)
    with pytest.raises(NotModularOfWeight):
        series_to_poly(QSeries([1] * 12), 2)


@pytest.mark.parametrize("nu", range(4, 52, 2))
def test_series_to_poly_round_trip(nu):
    P = weight_form(nu)
    assert P.is_homogeneous() and P.degree() == nu
    assert series_to_poly(phi_eval(P, 20), nu) == P


def test_reduce_mod_p_examples():
    E12 = (e4**3 * 441 + e6**2 * 250) / 691
    _, f4, f6 = GradedPoly.gens(13)
    assert reduce_mod_p(E12, 13) == f4**3 * 6 + f6**2 * 8
    assert reduce_mod_p(e4, 7) == GradedPoly.gens(7)[1]
    with pytest.raises(NonIntegralCoefficient):
        reduce_mod_p(GradedPoly.constant(Fraction(1, 5)), 5)


def test_compute_ab_examples():
    ab5, ab7, ab11 = compute_AB(5), compute_AB(7), compute_AB(11)
    assert (ab5.A, ab5.B) == (e4, e6)
    assert (ab7.A, ab7.B) == (e6, e4**2)
    _, f4, f6 = GradedPoly.gens(11)
    assert ab11.A == e4 * e6
    assert ab11.B_mod == f4**3 * 5 + f6**2 * 7


def test_ab_at_13():
    _, f4, f6 = GradedPoly.gens(13)
    assert compute_AB(13).A_mod == f4**3 * 6 + f6**2 * 8


@pytest.mark.parametrize("p,N", [(5, 10), (7, 10), (5, 1), (13, 40)])
def test_congruences(p, N):
    assert verify_congruences(p, N).passed


def test_congruence_fails_for_wrong_weight():
    # E_4 is not 1 mod 7
    assert eisenstein(4, 5, p=7) != QSeries.constant(1, 5, 7)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 23])
def test_diff_relations(p):
    assert verify_diff_relations(p).passed


def test_diff_relation_examples():
    serre = fields(11).serre
    ab = compute_AB(11)
    assert serre(ab.A_mod) == ab.B_mod
    _, f4, _ = GradedPoly.gens(11)
    assert serre(ab.B_mod) == -(f4 * ab.A_mod)
