import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from ramanujan_vf.errors import NotPrime, ZeroInverse
from ramanujan_vf.exact_arith import (
    FpElement,
    bernoulli,
    divisor_sigma,
    fp2_construct,
    fp_invert,
    is_prime,
    require_prime,
)


def test_bernoulli_base_and_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(4) == Fraction(-1, 30)
    assert -2 * 4 / bernoulli(4) == 240
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_normalisations_give_eisenstein_constants():
    assert -2 * 2 / bernoulli(2) == -24
    assert -2 * 6 / bernoulli(6) == -504


def test_bernoulli_recurrence_up_to_60():
    for n in range(1, 61):
        assert sum(math.comb(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_bernoulli_matches_sympy_on_even_indices():
    for n in range(0, 61, 2):
        assert bernoulli(n) == Fraction(str(sympy.bernoulli(n)))


def test_odd_bernoulli_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 40, 2))


@pytest.mark.parametrize("mu,n,expected", [(1, 1, 1), (3, 2, 9), (5, 1, 1), (1, 12, 28), (0, 12, 6)])
def test_divisor_sigma_examples(mu, n, expected):
    assert divisor_sigma(mu, n) == expected


@given(st.integers(0, 6), st.integers(1, 400))
def test_divisor_sigma_brute_force(mu, n):
    assert divisor_sigma(mu, n) == sum(d**mu for d in range(1, n + 1) if n % d == 0)


@given(st.integers(0, 5), st.integers(1, 60), st.integers(1, 60))
def test_divisor_sigma_multiplicative(mu, m, n):
    if math.gcd(m, n) == 1:
        assert divisor_sigma(mu, m * n) == divisor_sigma(mu, m) * divisor_sigma(mu, n)


@pytest.mark.parametrize("x,p,inv", [(2, 5, 3), (12, 7, 3), (1, 11, 1)])
def test_fp_invert_examples(x, p, inv):
    assert fp_invert(FpElement(x, p)) == FpElement(inv, p)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_fp_invert_exhaustive(p):
    for x in range(1, p):
        assert fp_invert(FpElement(x, p)) * FpElement(x, p) == 1


def test_fp_invert_zero():
    with pytest.raises(ZeroInverse):
        fp_invert(FpElement(0, 7))


@pytest.mark.parametrize("p,n", [(5, 2), (7, 3), (13, 2), (11, 2), (17, 3), (23, 5)])
def test_fp2_nonresidue(p, n):
    assert fp2_construct(p).n == n


@pytest.mark.parametrize("p", [4, 9, 2, 3, 1, 15])
def test_fp2_rejects_bad_characteristic(p):
    with pytest.raises(NotPrime):
        fp2_construct(p)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_fp2_enumeration_and_frobenius(p):
    F = fp2_construct(p)
    elems = F.elements()
    assert len(set(elems)) == p * p
    for x in elems:
        assert x.frobenius().frobenius() == x
        assert x**p == x.frobenius()


@pytest.mark.parametrize("p", [5, 7])
def test_fp2_field_axioms(p):
    F = fp2_construct(p)
    elems = F.elements()
    for x in elems:
        if x:
            assert x * x.inverse() == 1
    s = F(0, 1)
    assert s * s == F.n
    # distributivity on a sample
    for x in elems[::7]:
        for y in elems[::5]:
            for z in elems[::11]:
                assert x * (y + z) == x * y + x * z


def test_primality():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert require_prime(101) == 101
    with pytest.raises(NotPrime):
        require_prime(3)
