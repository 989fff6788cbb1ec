import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_vf.errors import InexactDivision, NonIntegralCoefficient
from ramanujan_vf.graded import (
    Derivation,
    GradedPoly,
    basis_decompose,
    derivation_apply,
    derivation_bracket,
    derivation_power,
    fields,
    iterate_apply,
    make_fields,
    poly_from_str,
    recompose,
)

from conftest import random_poly

e2, e4, e6 = GradedPoly.gens()


def test_poly_arith_examples():
    D = e4**3 - e6**2
    assert D.exact_div(D) == 1
    assert (e2 * e4).terms == {(1, 1, 0): 1}
    _, f4, f6 = GradedPoly.gens(5)
    assert (f4 * f6 + f4 * f4 * 4).exact_div(f4) == f6 + f4 * 4


def test_exact_div_rejects_remainder():
    with pytest.raises(InexactDivision):
        (e4**2 + e6).exact_div(e4)
    assert e4.divides(e4 * e6) and not e6.divides(e4)


def test_mod_p_coefficients_reduce():
    _, f4, _ = GradedPoly.gens(7)
    assert f4 * 7 == 0
    assert (f4 * 3) / 3 == f4


def test_reduce_mod_error_names_coefficient():
    with pytest.raises(NonIntegralCoefficient):
        (e4 / 5).reduce_mod(5)


def test_str_and_parse_round_trip():
    P = (e4**3 * 441 + e6**2 * 250) / 691
    assert poly_from_str(str(P)) == P
    _, f4, f6 = GradedPoly.gens(11)
    Q = f4**3 * 5 + f6**2 * 7
    assert str(Q) == "5*e4^3 + 7*e6^2"
    assert poly_from_str(str(Q), 11) == Q


def test_weights_and_homogeneity():
    assert (e2 * e4 + e6).degree() == 6
    assert (e2 + e4).weights() == {2, 4}
    assert not (e2 + e4).is_homogeneous()


def test_partials():
    P = e2**2 * e4 + e6**3
    assert P.partial(0) == e2 * e4 * 2
    assert P.partial(2) == e6**2 * 3


def test_derivation_apply_examples():
    R, F, H, serre = fields()
    assert R(e2) == (e2**2 - e4) / 12
    assert serre(e4) == e6 * -4
    assert derivation_apply(H, e4**3) == e4**3 * 12


def test_make_fields_examples():
    R, F, H, serre = make_fields()
    assert F(e2) == -12
    assert H(e6) == e6 * 6
    assert R(e4) * 12 - e2 * H(e4) == e6 * -4 == serre(e4)


def test_bracket_examples():
    R, F, H, _ = fields()
    assert derivation_bracket(R, F) == H
    assert derivation_bracket(H, R) == R * 2
    assert derivation_bracket(R, R).is_zero()


@pytest.mark.parametrize("p", [None, 5, 7, 11, 13])
def test_sl2_relations(p):
    R, F, H, _ = fields(p)
    assert derivation_bracket(R, F) == H
    assert derivation_bracket(H, F) == F * -2
    assert derivation_bracket(H, R) == R * 2


def test_field_degrees():
    R, F, H, serre = fields()
    assert (R.degree(), F.degree(), H.degree(), serre.degree()) == (2, -2, 0, 2)


def test_derivation_power_examples():
    R5 = fields(5).R
    D, certified = derivation_power(R5, 5)
    _, f4, f6 = GradedPoly.gens(5)
    assert certified
    assert D.img4 == 0
    assert D.img2 == f6**2 * 3 + f4**3 * 2
    assert derivation_power(R5, 1)[0] == R5


def test_derivation_power_acts_as_iterate():
    R7 = fields(7).R
    D, _ = derivation_power(R7, 7)
    rng = random.Random(3)
    for _ in range(3):
        P = random_poly(rng, 7, max_exp=2)
        assert D(P) == iterate_apply(R7, P, 7)


def test_basis_decompose_examples():
    R, F, H, _ = fields()
    assert basis_decompose(H).as_tuple() == (0, 0, 1)
    assert basis_decompose(R * e4).as_tuple() == (e4, 0, 0)
    assert basis_decompose(F * e6).as_tuple() == (0, e6, 0)


@pytest.mark.parametrize("p", [None, 5, 13])
def test_decomposition_round_trip(p):
    rng = random.Random(p or 0)
    for _ in range(5):
        a, b, c = (random_poly(rng, p) for _ in range(3))
        X = recompose(a, b, c, p)
        dec = basis_decompose(X)
        assert dec.certified
        assert dec.as_tuple() == (a, b, c)


# -- randomized Leibniz / Jacobi ----------------------------------------------

seeds = st.integers(0, 10**6)
chars = st.sampled_from([None, 5, 7, 11, 13])


def _random_derivation(rng, p):
    return Derivation(*(random_poly(rng, p, max_exp=2, max_terms=3) for _ in range(3)))


@settings(max_examples=40, deadline=None)
@given(seeds, chars)
def test_leibniz(seed, p):
    rng = random.Random(seed)
    D = _random_derivation(rng, p)
    P, Q = random_poly(rng, p), random_poly(rng, p)
    assert D(P * Q) == D(P) * Q + P * D(Q)


@settings(max_examples=25, deadline=None)
@given(seeds, chars)
def test_jacobi(seed, p):
    rng = random.Random(seed)
    X, Y, Z = (_random_derivation(rng, p) for _ in range(3))
    br = derivation_bracket
    total = br(X, br(Y, Z)) + br(Y, br(Z, X)) + br(Z, br(X, Y))
    assert total.is_zero()


@settings(max_examples=25, deadline=None)
@given(seeds, chars)
def test_bracket_is_commutator(seed, p):
    rng = random.Random(seed)
    X, Y = _random_derivation(rng, p), _random_derivation(rng, p)
    P = random_poly(rng, p)
    assert derivation_bracket(X, Y)(P) == X(Y(P)) - Y(X(P))


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_euler_field_scales_by_weight(seed):
    rng = random.Random(seed)
    exp = (rng.randint(0, 4), rng.randint(0, 4), rng.randint(0, 4))
    m = GradedPoly.monomial(exp, Fraction(rng.randint(1, 9)))
    assert fields().H(m) == m * m.degree()
