from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_vf.exact_arith import divisor_sigma
from ramanujan_vf.graded import GradedPoly, fields
from ramanujan_vf.qseries import (
    QSeries,
    eisenstein,
    phi_eval,
    rs_derivative_q,
    series_add,
    series_mul,
    series_scale,
    theta,
    verify_ramanujan_system,
)

e2, e4, e6 = GradedPoly.gens()


def test_eisenstein_examples():
    assert eisenstein(2, 3).coeffs == (1, -24, -72)
    assert eisenstein(4, 2).coeffs == (1, 240)
    assert eisenstein(6, 2).coeffs == (1, -504)


def test_eisenstein_matches_divisor_sums():
    E = eisenstein(8, 15)
    assert all(E[n] == 480 * divisor_sigma(7, n) for n in range(1, 15))


def test_eisenstein_str():
    assert str(eisenstein(4, 3)) == "1 + 240q + 2160q^2"
    assert str(eisenstein(2, 2)) == "1 - 24q"


def test_eisenstein_mod_p():
    assert eisenstein(4, 10, p=5).coeffs == (1,) + (0,) * 9


def test_theta_examples():
    assert theta(QSeries([1, 0, 0])).coeffs == (0, 0, 0)
    assert theta(QSeries([0, 1, 0])).coeffs == (0, 1, 0)
    assert theta(QSeries([1, 240, 2160])).coeffs == (0, 240, 4320)


def test_series_arith_examples():
    assert series_mul(QSeries([1, 1, 0]), QSeries([1, -1, 0])).coeffs == (1, 0, -1)
    assert series_mul(eisenstein(2, 2), eisenstein(4, 2)).coeffs == (1, 216)
    f = eisenstein(6, 5)
    assert series_add(f, QSeries([0] * 5)) == f
    assert series_scale(f, Fraction(1, 2)).coeffs[1] == -252


def test_precision_is_the_minimum():
    assert (eisenstein(4, 3) * eisenstein(6, 7)).precision == 3


def test_compare_reports_first_mismatch():
    cmp = QSeries([1, 2, 3]).compare(QSeries([1, 2, 4]))
    assert not cmp.equal and cmp.first_mismatch == 2


def test_phi_eval_examples():
    assert phi_eval(e4, 2).coeffs == (1, 240)
    assert phi_eval(e4**3 - e6**2, 2).coeffs == (0, 1728)
    assert phi_eval(GradedPoly.constant(1), 3).coeffs == (1, 0, 0)


def test_discriminant_is_1728_delta():
    # Delta = q - 24 q^2 + 252 q^3 - 1472 q^4 + 4830 q^5
    d = phi_eval((e4**3 - e6**2) / 1728, 6)
    assert d.coeffs == (0, 1, -24, 252, -1472, 4830)


def test_rs_derivative_examples():
    # both equal the images of the Serre field: -4 E6 and -6 E4^2
    assert rs_derivative_q(eisenstein(4, 2), 4).coeffs == (-4, 2016)
    assert rs_derivative_q(eisenstein(6, 2), 6).coeffs == (-6, -2880)
    assert rs_derivative_q(QSeries([0, 0, 0]), 4).coeffs == (0, 0, 0)


def _weight_monomials(max_weight):
    for j in range(max_weight // 4 + 1):
        for k in range(max_weight // 6 + 1):
            if 0 < 4 * j + 6 * k <= max_weight:
                yield j, k


@pytest.mark.parametrize("j,k", list(_weight_monomials(24)))
def test_rs_derivative_commutes_with_phi(j, k):
    serre = fields().serre
    P = e4**j * e6**k
    nu = 4 * j + 6 * k
    assert rs_derivative_q(phi_eval(P, 10), nu) == phi_eval(serre(P), 10)


def test_ramanujan_system():
    assert verify_ramanujan_system(1).passed
    assert verify_ramanujan_system(2).passed
    assert verify_ramanujan_system(30).passed


@pytest.mark.parametrize("p", [5, 7])
def test_theta_power_is_theta_mod_p(p):
    f = eisenstein(4, 25, p=p) * eisenstein(2, 25, p=p) + eisenstein(6, 25, p=p)
    g = f
    for _ in range(p):
        g = theta(g)
    assert g == theta(f)


coeff = st.integers(-50, 50)
series = st.lists(coeff, min_size=20, max_size=20).map(QSeries)
small_poly = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    st.fractions(min_value=-9, max_value=9, max_denominator=5),
    min_size=1,
    max_size=3,
).map(GradedPoly)


@settings(max_examples=30, deadline=None)
@given(small_poly, small_poly)
def test_phi_is_a_ring_homomorphism(P, Q):
    assert phi_eval(P * Q, 20) == phi_eval(P, 20) * phi_eval(Q, 20)
    assert phi_eval(P + Q, 20) == phi_eval(P, 20) + phi_eval(Q, 20)


@settings(max_examples=30, deadline=None)
@given(series, series)
def test_theta_leibniz(f, g):
    assert theta(f * g) == theta(f) * g + f * theta(g)


@settings(max_examples=20, deadline=None)
@given(small_poly, st.sampled_from([5, 7, 11]))
def test_phi_commutes_with_reduction(P, p):
    if all(Fraction(c).denominator % p for c in P.terms.values()):
        assert phi_eval(P, 12, p=p) == phi_eval(P, 12).reduce_mod(p)
