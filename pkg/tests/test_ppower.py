import pytest

from ramanujan_vf.errors import BoundExceeded, NotPrime
from ramanujan_vf.graded import GradedPoly, basis_decompose, derivation_bracket, fields
from ramanujan_vf.modforms import compute_AB
from ramanujan_vf.ppower import (
    coefficient_system_check,
    commutation_check,
    expected_decomposition,
    first_integral,
    first_integral_check,
    p_curvature_witness,
    pth_power,
    rp_closed,
    rp_iterated,
    singular_set_checks,
)

from conftest import SWEEP


def test_rp_closed_examples():
    _, f4, f6 = GradedPoly.gens(5)
    R5 = rp_closed(5)
    assert R5.img4 == 0
    assert R5.img2 == f6**2 * 3 + f4**3 * 2
    _, g4, g6 = GradedPoly.gens(7)
    assert rp_closed(7).img2 == g4 * (g4**3 - g6**2) * 3


def test_rp_iterated_examples():
    _, f4, f6 = GradedPoly.gens(5)
    R5 = rp_iterated(5)
    assert R5.img4 == 0
    assert R5.img2 == f6**2 * 3 + f4**3 * 2


@pytest.mark.parametrize("p", SWEEP[:5])
def test_closed_equals_iterated(p):
    assert rp_closed(p) == rp_iterated(p)


def test_bounds_and_bad_input():
    with pytest.raises(BoundExceeded):
        rp_iterated(211)
    with pytest.raises(NotPrime):
        rp_closed(9)


def test_decomposition_at_5():
    _, f4, f6 = GradedPoly.gens(5)
    e2 = GradedPoly.gens(5)[0]
    P = (f6 - e2 * f4) * 3  # 1/12 = 3 mod 5
    dec = basis_decompose(rp_iterated(5))
    assert dec.certified
    assert dec.as_tuple() == (f4**2, -(P * P), f4 * P)


def test_r3_at_7():
    e2, f4, f6 = GradedPoly.gens(7)
    r3 = basis_decompose(rp_closed(7)).r3
    assert r3 == f6 * (f4**2 - e2 * f6) * 3
    assert r3 != 0


@pytest.mark.parametrize("p", SWEEP)
def test_r1_is_e2_free_of_degree_2p_minus_2(p):
    r1 = expected_decomposition(p)[0]
    assert not r1.involves_e2() and r1.degree() == 2 * p - 2


def test_pth_power_result():
    res = pth_power(7)
    assert res.equal
    assert res.decomposition.as_tuple() == expected_decomposition(7)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 31, 97])
def test_first_integral(p):
    R = fields(p).R
    assert R(first_integral(p)) == 0
    assert first_integral_check(p).passed


def test_first_integral_by_hand_at_5():
    e2, e4, e6 = GradedPoly.gens(5)
    R = fields(5).R
    assert R(e6 - e2 * e4) == 0


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_p_curvature_nonzero(p):
    res = p_curvature_witness(p)
    assert res.passed
    assert basis_decompose(rp_closed(p)).r3 != 0


@pytest.mark.parametrize("p", SWEEP)
def test_coefficient_system(p):
    assert coefficient_system_check(p).passed
    R = fields(p).R
    r1, r2, r3 = expected_decomposition(p)
    assert R(r1) == r3 * 2 and R(r2) == 0 and R(r3) == -r2


def test_coefficient_system_trivial_solution():
    from ramanujan_vf.graded import BasisDecomposition

    zero = GradedPoly({}, 5)
    assert coefficient_system_check(5, BasisDecomposition(zero, zero, zero, True)).passed


@pytest.mark.parametrize("p", SWEEP[:6])
def test_commutation(p):
    R, F, _, _ = fields(p)
    Rp = rp_closed(p)
    assert derivation_bracket(R, Rp).is_zero()
    assert derivation_bracket(F, Rp).is_zero()
    assert commutation_check(p).passed


def test_singular_set_divisibility_at_5():
    _, f4, f6 = GradedPoly.gens(5)
    D = f4**3 - f6**2
    assert rp_closed(5).img2.exact_div(D) == GradedPoly.constant(-3, 5)


def test_singular_set_point_on_discriminant():
    R5 = rp_closed(5)
    assert all(img.evaluate(0, 1, 1) == 0 for img in R5.images)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_singular_set_scans(p):
    assert singular_set_checks(p, enumerate_points=True).passed


def test_ab_feeds_closed_formula():
    ab = compute_AB(5)
    assert ab.A_mod == GradedPoly.gens(5)[1]
