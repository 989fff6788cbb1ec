"""Exact computer algebra for the Ramanujan vector field in characteristic p.

Main entry points:

* :func:`rp_closed` / :func:`rp_iterated` -- the p-th power of R, two ways
* :func:`compute_AB` -- the polynomials A, B with A(E4,E6) = E_{p-1}, B(E4,E6) = E_{p+1}
* :func:`ss_from_A` / :func:`ss_deuring_oracle` -- the supersingular polynomial, two ways
"""

from .exact_arith import Fp2, PrimeField, bernoulli, divisor_sigma, fp2_construct, fp_invert
from .graded import (
    Derivation,
    GradedPoly,
    basis_decompose,
    derivation_bracket,
    derivation_power,
    make_fields,
)
from .modforms import compute_AB, series_to_poly, weight_basis
from .ppower import rp_closed, rp_iterated
from .qseries import QSeries, eisenstein, phi_eval, theta
from .supersingular import factor_exponents, ss_deuring_oracle, ss_from_A

__all__ = [
    "Derivation",
    "Fp2",
    "GradedPoly",
    "PrimeField",
    "QSeries",
    "basis_decompose",
    "bernoulli",
    "compute_AB",
    "derivation_bracket",
    "derivation_power",
    "divisor_sigma",
    "eisenstein",
    "factor_exponents",
    "fp2_construct",
    "fp_invert",
    "make_fields",
    "phi_eval",
    "rp_closed",
    "rp_iterated",
    "series_to_poly",
    "ss_deuring_oracle",
    "ss_from_A",
    "theta",
    "weight_basis",
]
