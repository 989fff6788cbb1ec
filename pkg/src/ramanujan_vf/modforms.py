"""Modular forms as polynomials in E4, E6, and the Serre/Swinnerton-Dyer pair A, B."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InsufficientPrecision, NonIntegralCoefficient, NotModularOfWeight
from .exact_arith import require_prime
from .graded import GradedPoly, fields
from .qseries import QSeries, eisenstein, phi_eval
from .report import CheckResult, timed

OVERDETERMINATION = 5


@dataclass(frozen=True)
class WeightBasis:
    weight: int
    exponents: tuple  # (a, b) with 4a + 6b = weight, descending a

    def __len__(self):
        return len(self.exponents)

    def monomials(self, p=None):
        return [GradedPoly.monomial((0, a, b), 1, p) for a, b in self.exponents]


def weight_basis(nu: int) -> WeightBasis:
    if nu < 0 or nu % 2:
        raise ValueError(f"weight must be even and non-negative, got {nu}")
    pairs = tuple((a, (nu - 4 * a) // 6) for a in range(nu // 4, -1, -1) if (nu - 4 * a) % 6 == 0)
    return WeightBasis(nu, pairs)


def reconstruction_precision(nu: int) -> int:
    return nu // 12 + 10


def _solve(matrix, rhs):
    """Gaussian elimination over Q for a square nonsingular system."""
    n = len(matrix)
    m = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system: weight monomials are dependent")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / Fraction(m[col][col])
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def series_to_poly(f: QSeries, nu: int) -> GradedPoly:
    """The unique polynomial in e4, e6 of weight nu whose image is f.

    The first ``len(basis)`` coefficients determine the solution; every
    further available coefficient is checked.
    """
    if f.p is not None:
        raise ValueError("series_to_poly works over Q")
    basis = weight_basis(nu)
    size = len(basis)
    if size == 0:
        raise NotModularOfWeight(f"there are no modular forms of weight {nu}")
    N = f.precision
    if N < size + OVERDETERMINATION:
        raise InsufficientPrecision(
            f"need at least {size + OVERDETERMINATION} coefficients, got {N}"
        )
    images = [phi_eval(m, N) for m in basis.monomials()]
    matrix = [[images[c][r] for c in range(size)] for r in range(size)]
    sol = _solve(matrix, [f[r] for r in range(size)])
    for n in range(size, N):
        if sum(s * img[n] for s, img in zip(sol, images)) != f[n]:
            raise NotModularOfWeight(f"coefficient q^{n} disagrees with weight {nu}")
    return GradedPoly({(0, a, b): s for (a, b), s in zip(basis.exponents, sol)})


def reduce_mod_p(P: GradedPoly, p: int) -> GradedPoly:
    return P.reduce_mod(p)


@dataclass(frozen=True)
class ABPair:
    p: int
    A: GradedPoly
    B: GradedPoly
    A_mod: GradedPoly
    B_mod: GradedPoly


@lru_cache(maxsize=None)
def weight_form(nu: int) -> GradedPoly:
    """E_nu written as a polynomial in e4, e6 over Q."""
    return series_to_poly(eisenstein(nu, reconstruction_precision(nu)), nu)


@lru_cache(maxsize=None)
def compute_AB(p: int) -> ABPair:
    require_prime(p)
    A = weight_form(p - 1)
    B = weight_form(p + 1)
    try:
        A_mod, B_mod = A.reduce_mod(p), B.reduce_mod(p)
    except NonIntegralCoefficient as exc:
        raise NonIntegralCoefficient(f"p = {p}: {exc}") from None
    return ABPair(p, A, B, A_mod, B_mod)


def verify_congruences(p: int, N: int) -> CheckResult:
    """E_{p-1} = 1 and E_{p+1} = E_2 coefficientwise mod p, to N coefficients."""
    require_prime(p)
    with timed() as clock:
        one = QSeries.constant(1, N, p)
        low = eisenstein(p - 1, N, p).compare(one)
        high = eisenstein(p + 1, N, p).compare(eisenstein(2, N, p))
        witness = None
        if not low:
            witness = {"series": f"E_{p - 1}", "coefficient": low.first_mismatch}
        elif not high:
            witness = {"series": f"E_{p + 1}", "coefficient": high.first_mismatch}
    return CheckResult(
        name="congruences",
        claim="E_{p-1} = 1 and E_{p+1} = E_2 modulo p",
        passed=witness is None,
        detail=f"checked to precision {N}",
        witness=witness,
        seconds=clock.seconds,
    )


def verify_diff_relations(p: int) -> CheckResult:
    """serre(A~) = B~ and serre(B~) = -e4 A~ over F_p."""
    with timed() as clock:
        ab = compute_AB(p)
        serre = fields(p).serre
        _, e4, _ = GradedPoly.gens(p)
        lhs1 = serre.apply(ab.A_mod)
        lhs2 = serre.apply(ab.B_mod)
        ok1 = lhs1 == ab.B_mod
        ok2 = lhs2 == -(e4 * ab.A_mod)
        witness = None
        if not ok1:
            witness = {"serre(A~) - B~": str(lhs1 - ab.B_mod)}
        elif not ok2:
            witness = {"serre(B~) + e4 A~": str(lhs2 + e4 * ab.A_mod)}
    return CheckResult(
        name="diff_relations",
        claim="the Ramanujan-Serre field maps A~ to B~ and B~ to -e4 A~",
        passed=ok1 and ok2,
        witness=witness,
        seconds=clock.seconds,
    )
