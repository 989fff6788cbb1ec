"""Supersingular j-invariants, the factorisation of A~ and B~, and the
supersingular locus inside the (e2, e4, e6) moduli space.

The supersingular polynomial is computed twice: from the factorisation of
A~ (the factorisation route) and by brute force over F_{p^2} with the
Deuring criterion (the Hasse invariant of y^2 = x^3 + Ax + B is the
coefficient of x^(p-1) in (x^3 + Ax + B)^((p-1)/2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from . import fp2_vec
from .errors import BoundExceeded, NotBivariate, NotHomogeneous, OnDiscriminant
from .exact_arith import Fp2Element, PrimeField, fp2_construct, require_prime
from .graded import GradedPoly, fields
from .modforms import compute_AB
from .ppower import rp_closed
from .report import CheckResult, timed
from .unipoly import UniPoly

ORACLE_BOUND = 101
SCAN_BOUND = 13

# (delta, epsilon, delta', epsilon') by p mod 12: e4 and e6 multiplicities of A~ and B~
EXPONENT_TABLE = {
    1: (0, 0, 2, 1),
    5: (1, 0, 0, 1),
    7: (0, 1, 2, 0),
    11: (1, 1, 0, 0),
}


# -- factorisation of homogeneous forms in e4, e6 ---------------------------


@dataclass(frozen=True)
class FactorizationData:
    """P = alpha0 * e4^delta * e6^epsilon * prod_i (e4^3 - alpha_i e6^2)."""

    p: int
    delta: int
    epsilon: int
    m: int
    alpha0: int
    alphas: tuple  # roots in F_p^2 with multiplicity, sorted; may be fewer than m
    cofactor: GradedPoly
    degree: int

    @property
    def distinct_alphas(self):
        return tuple(dict.fromkeys(self.alphas))

    @property
    def split(self) -> bool:
        """All m factors found over F_{p^2}."""
        return len(self.alphas) == self.m

    @property
    def squarefree_cofactor(self) -> bool:
        return self.split and len(self.distinct_alphas) == self.m

    def frobenius_stable(self) -> bool:
        roots = set(self.alphas)
        return all(a.frobenius() in roots for a in roots)


def _multiplicity(P: GradedPoly, var: GradedPoly):
    k = 0
    while var.divides(P):
        P = P.exact_div(var)
        k += 1
    return k, P


def cofactor_univariate(g: GradedPoly, m: int) -> UniPoly:
    """sum c_k x^k where g = sum c_k e4^(3k) e6^(2(m-k))."""
    coeffs = [0] * (m + 1)
    for (_, j, _), c in g.terms.items():
        coeffs[j // 3] = c
    return UniPoly(coeffs, PrimeField(g.p))


def factor_exponents(P: GradedPoly) -> FactorizationData:
    """Multiplicities of e4 and e6 in P, and the roots alpha_i of the rest.

    The roots are found by exhaustive search over F_{p^2}.
    """
    if P.p is None:
        raise ValueError("factor_exponents works over F_p")
    if P.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not P.is_homogeneous():
        raise NotHomogeneous(f"{P} is not homogeneous")
    if P.involves_e2():
        raise NotBivariate(f"{P} involves e2")
    _, e4, e6 = GradedPoly.gens(P.p)
    delta, rest = _multiplicity(P, e4)
    epsilon, rest = _multiplicity(rest, e6)
    deg_rest = rest.degree()
    if deg_rest % 12:
        raise RuntimeError(f"cofactor degree {deg_rest} is not a multiple of 12")
    m = deg_rest // 12
    h = cofactor_univariate(rest, m)
    alpha0 = int(h.leading())
    alphas = []
    if m:
        for r, k in h.roots(multiplicities=True):
            alphas.extend([r] * k)
    return FactorizationData(
        p=P.p,
        delta=delta,
        epsilon=epsilon,
        m=m,
        alpha0=alpha0,
        alphas=tuple(alphas),
        cofactor=rest,
        degree=P.degree(),
    )


@lru_cache(maxsize=None)
def factor_A(p: int) -> FactorizationData:
    return factor_exponents(compute_AB(p).A_mod)


@lru_cache(maxsize=None)
def factor_B(p: int) -> FactorizationData:
    return factor_exponents(compute_AB(p).B_mod)


def table_exponents_check(p: int) -> CheckResult:
    with timed() as clock:
        fa, fb = factor_A(p), factor_B(p)
        got = (fa.delta, fa.epsilon, fb.delta, fb.epsilon)
        want = EXPONENT_TABLE[p % 12]
        degree_ok = p - 1 == 12 * fa.m + 4 * fa.delta + 6 * fa.epsilon and (
            p + 1 == 12 * fb.m + 4 * fb.delta + 6 * fb.epsilon
        )
    return CheckResult(
        name="table1",
        claim="e4, e6 multiplicities of A~ and B~ by p mod 12",
        passed=got == want and degree_ok,
        detail=f"p = {p % 12} mod 12: (delta, eps, delta', eps') = {got}, m = {fa.m}, m' = {fb.m}",
        witness=None if got == want else {"expected": list(want), "got": list(got)},
        seconds=clock.seconds,
    )


def coprimality_and_squarefree(p: int) -> CheckResult:
    """A~ squarefree, gcd(A~, B~) = 1, and the e4/e6 multiplicities of B~."""
    with timed() as clock:
        fa, fb = factor_A(p), factor_B(p)
        problems = []
        if not fa.squarefree_cofactor:
            problems.append("A~ has a repeated or non-split factor")
        if fa.delta > 1 or fa.epsilon > 1:
            problems.append("A~ has a repeated e4 or e6 factor")
        # the alphas all lie in F_p^2, so B~'s F_p^2-rational roots decide sharing
        shared = set(fa.alphas) & set(fb.alphas)
        if shared:
            problems.append(f"common factors e4^3 - a e6^2 for a in {sorted(map(str, shared))}")
        if fa.delta and fb.delta:
            problems.append("e4 divides both")
        if fa.epsilon and fb.epsilon:
            problems.append("e6 divides both")
        if (fb.delta, fb.epsilon) != EXPONENT_TABLE[p % 12][2:]:
            problems.append(f"B~ multiplicities {(fb.delta, fb.epsilon)} disagree with the table")
        if not fa.frobenius_stable():
            problems.append("roots of A~ are not Frobenius-stable")
    return CheckResult(
        name="coprime_squarefree",
        claim="A~ has only simple factors, none shared with B~",
        passed=not problems,
        detail=f"m = {fa.m}, distinct alphas = {len(fa.distinct_alphas)}",
        witness={"problems": problems} if problems else None,
        seconds=clock.seconds,
    )


# -- supersingular polynomial ------------------------------------------------


@dataclass(frozen=True)
class SupersingularPolynomial:
    p: int
    poly: UniPoly
    j_values: tuple

    @property
    def n_p(self) -> int:
        return self.poly.degree


def _make_ss(p, poly: UniPoly) -> SupersingularPolynomial:
    poly = poly.monic()
    return SupersingularPolynomial(p, poly, tuple(poly.roots()) if poly.degree > 0 else ())


@lru_cache(maxsize=None)
def ss_from_A(p: int) -> SupersingularPolynomial:
    """ss_p(t) = monic t^delta (t - 1728)^eps f(t), with
    f(t) = 1728^-m sum_k c_k t^k (t - 1728)^(m-k) read off the cofactor of A~."""
    require_prime(p)
    fa = factor_A(p)
    Fp = PrimeField(p)
    h = cofactor_univariate(fa.cofactor, fa.m)
    t = UniPoly([0, 1], Fp)
    shifted = t - 1728
    f = UniPoly([], Fp)
    for k, c in enumerate(h.coeffs):
        if c:
            f = f + (t**k) * (shifted ** (fa.m - k)) * c
    f = f * (Fp(1728) ** (-fa.m))
    poly = (t**fa.delta) * (shifted**fa.epsilon) * f
    return _make_ss(p, poly)


def _hasse_terms(p):
    n = (p - 1) // 2
    out = []
    for i in range(n + 1):
        j = 2 * n - 3 * i
        k = 2 * i - n
        if j >= 0 and k >= 0:
            coef = factorial(n) // (factorial(i) * factorial(j) * factorial(k))
            out.append((j, k, coef % p))
    return out


def hasse_invariant(A, B, p: int):
    """Coefficient of x^(p-1) in (x^3 + A x + B)^((p-1)/2), for scalar field elements."""
    total = 0
    for j, k, coef in _hasse_terms(p):
        if coef:
            total = total + (A**j) * (B**k) * coef
    return total


def hasse_invariant_grid(A, B, field):
    """Vectorised Hasse invariant over pair-arrays of F_{p^2} coefficients."""
    p, n = field.p, field.n
    acc = fp2_vec.const(0, A[0].shape, p)
    for j, k, coef in _hasse_terms(p):
        if coef:
            term = fp2_vec.mul(fp2_vec.power(A, j, p, n), fp2_vec.power(B, k, p, n), p, n)
            acc = fp2_vec.add(acc, fp2_vec.scale(term, coef, p), p)
    return acc


def representative_curve_grid(js, field):
    """A, B arrays with j(y^2 = x^3 + Ax + B) = j for every j in ``js``."""
    p, n = field.p, field.n
    c = fp2_vec.sub(fp2_vec.const(1728, js[0].shape, p), js, p)
    A = fp2_vec.scale(fp2_vec.mul(js, c, p, n), 3, p)
    B = fp2_vec.scale(fp2_vec.mul(js, fp2_vec.mul(c, c, p, n), p, n), 2, p)
    j0 = fp2_vec.is_zero(js)
    j1728 = fp2_vec.is_zero(c)
    A[0][j0], A[1][j0], B[0][j0], B[1][j0] = 0, 0, 1, 0
    A[0][j1728], A[1][j1728], B[0][j1728], B[1][j1728] = 1, 0, 0, 0
    return A, B


@lru_cache(maxsize=None)
def ss_deuring_oracle(p: int, bound: int = ORACLE_BOUND) -> SupersingularPolynomial:
    """Product of (t - j0) over j0 in F_{p^2} whose curves have zero Hasse invariant."""
    require_prime(p)
    if p > bound:
        raise BoundExceeded(f"p = {p} exceeds the oracle bound {bound}")
    field = fp2_construct(p)
    js = fp2_vec.all_elements(field)
    A, B = representative_curve_grid(js, field)
    hits = fp2_vec.is_zero(hasse_invariant_grid(A, B, field))
    roots = [field(int(a), int(b)) for a, b in zip(js[0][hits], js[1][hits])]
    poly = UniPoly.from_roots(roots, field).to_fp()
    return _make_ss(p, poly)


def oracle_equivalence_check(p: int) -> CheckResult:
    with timed() as clock:
        a, b = ss_from_A(p), ss_deuring_oracle(p)
        ok = a.poly == b.poly
    return CheckResult(
        name="ss_oracle",
        claim="ss_p from A~ agrees with the Deuring enumeration",
        passed=ok,
        detail=f"ss_{p} = {a.poly}",
        witness=None if ok else {"from_A": str(a.poly), "deuring": str(b.poly)},
        seconds=clock.seconds,
    )


# -- moduli points and curves -------------------------------------------------


def j_map(b, c):
    """1728 b^3 / (b^3 - c^2)."""
    d = b**3 - c**2
    if not d:
        raise OnDiscriminant("b^3 = c^2")
    return b**3 * 1728 / d


@dataclass(frozen=True)
class ModuliPoint:
    a: object
    b: object
    c: object

    def __post_init__(self):
        if not (self.b**3 - self.c**2):
            raise OnDiscriminant("b^3 = c^2: not a point of U")


@dataclass(frozen=True)
class ShortWeierstrassCurve:
    """y^2 = x^3 + A x + B."""

    A: object
    B: object

    def __post_init__(self):
        if not (self.A**3 * 4 + self.B**2 * 27):
            raise ValueError("singular curve")

    def j_invariant(self):
        four_a3 = self.A**3 * 4
        return four_a3 * 1728 / (four_a3 + self.B**2 * 27)

    def hasse_invariant(self):
        p = _characteristic(self.A, self.B)
        return hasse_invariant(self.A, self.B, p)

    def is_supersingular(self) -> bool:
        return not self.hasse_invariant()


def _characteristic(*xs):
    for x in xs:
        if isinstance(x, Fp2Element):
            return x.p
        if hasattr(x, "modulus"):
            return x.modulus
    raise ValueError("need finite field elements to determine the characteristic")


def curve_from_point(pt: ModuliPoint) -> ShortWeierstrassCurve:
    """Short form of y^2 = 4(x + a/12)^3 - (b/12)(x + a/12) + c/216."""
    return ShortWeierstrassCurve(-pt.b / 48, pt.c / 864)


def j_consistency_check(p: int) -> CheckResult:
    """j_map(b, c) equals the j-invariant of curve_from_point, over all of F_p^2."""
    with timed() as clock:
        Fp = PrimeField(p)
        bad = None
        count = 0
        for b in Fp.elements():
            for c in Fp.elements():
                if not (b**3 - c**2):
                    continue
                count += 1
                curve = curve_from_point(ModuliPoint(Fp(0), b, c))
                if curve.j_invariant() != j_map(b, c):
                    bad = [str(b), str(c)]
                    break
            if bad:
                break
    return CheckResult(
        name="j_consistency",
        claim="the j-map on U matches the j-invariant of the universal curve",
        passed=bad is None,
        detail=f"{count} points of F_{p}^2",
        witness=bad,
        seconds=clock.seconds,
    )


# -- the supersingular locus -------------------------------------------------


def locus_polynomial(p: int) -> GradedPoly:
    """Equation of J^-1(V(ss_p)) in U: A~ times e4^(2 delta) e6^eps.

    Raises RuntimeError if stripping repeated e4, e6 factors does not give
    A~ back up to a unit.
    """
    A = compute_AB(p).A_mod
    _, e4, e6 = GradedPoly.gens(p)
    delta, eps = EXPONENT_TABLE[p % 12][:2]
    f = (e4 ** (2 * delta)) * (e6**eps) * A
    fd = factor_exponents(f)
    if not fd.squarefree_cofactor:
        raise RuntimeError("locus cofactor is not squarefree")
    rad = fd.cofactor * (e4 ** min(fd.delta, 1)) * (e6 ** min(fd.epsilon, 1))
    lead = max(A.terms)
    if lead not in rad.terms or rad * (A.terms[lead] * pow(rad.terms[lead], -1, p)) != A:
        raise RuntimeError(f"radical of the locus polynomial is not A~ at p = {p}")
    return f


def locus_check(p: int) -> CheckResult:
    """The locus polynomial is the numerator of ss_p(J) and its radical is A~."""
    with timed() as clock:
        try:
            f = locus_polynomial(p)
            radical_ok = True
        except RuntimeError:
            f, radical_ok = None, False
        ss = ss_from_A(p).poly
        _, e4, e6 = GradedPoly.gens(p)
        disc = e4**3 - e6**2
        n = ss.degree
        numer = GradedPoly({}, p)
        for k, c in enumerate(ss.coeffs):
            numer = numer + ((e4**3) * 1728) ** k * disc ** (n - k) * int(c)
        pullback_ok = False
        if f is not None and not numer.is_zero():
            lead = max(f.terms)
            ratio = numer.terms.get(lead, 0) * pow(f.terms[lead], -1, p) % p
            pullback_ok = ratio != 0 and numer == f * ratio
    ok = radical_ok and pullback_ok
    return CheckResult(
        name="locus",
        claim="ss_p pulled back along J cuts out e4^(2 delta) e6^eps A~, with radical A~",
        passed=ok,
        detail=f"f_p = {f}" if f is not None and len(f.terms) < 6 else "",
        witness=None if ok else {"radical": radical_ok, "pullback": pullback_ok},
        seconds=clock.seconds,
    )


def component_count_check(p: int) -> CheckResult:
    with timed() as clock:
        fa = factor_A(p)
        ss = ss_from_A(p)
        count = fa.m + fa.delta + fa.epsilon
        ok = count == ss.n_p == len(ss.j_values)
    return CheckResult(
        name="components",
        claim="the supersingular locus has n_p = m + delta + eps components",
        passed=ok,
        detail=f"n_p = {ss.n_p}, m + delta + eps = {count}",
        seconds=clock.seconds,
    )


def _bc_grid(p):
    field = fp2_construct(p)
    b, c = fp2_vec.grid(fp2_vec.all_elements(field), 2)
    on_disc = fp2_vec.is_zero(
        fp2_vec.sub(fp2_vec.power(b, 3, p, field.n), fp2_vec.power(c, 2, p, field.n), p)
    )
    keep = ~on_disc
    return field, (b[0][keep], b[1][keep]), (c[0][keep], c[1][keep])


def supersingular_point_crosscheck(p: int) -> CheckResult:
    """A~(b, c) = 0 exactly when the curve of (0, b, c) is supersingular, on F_{p^2}^2."""
    if p > SCAN_BOUND:
        raise BoundExceeded(f"point scan limited to p <= {SCAN_BOUND}")
    with timed() as clock:
        A = compute_AB(p).A_mod
        field, b, c = _bc_grid(p)
        zero = fp2_vec.const(0, b[0].shape, p)
        on_locus = fp2_vec.is_zero(fp2_vec.eval_graded(A, zero, b, c, field))
        inv48 = pow(-48, -1, p)
        inv864 = pow(864, -1, p)
        cA = fp2_vec.scale(b, inv48, p)
        cB = fp2_vec.scale(c, inv864, p)
        ss = fp2_vec.is_zero(hasse_invariant_grid(cA, cB, field))
        bad = np.nonzero(on_locus != ss)[0]
        witness = None
        if len(bad):
            i = bad[0]
            witness = {"b": str(field(int(b[0][i]), int(b[1][i]))), "c": str(field(int(c[0][i]), int(c[1][i])))}
    return CheckResult(
        name="supersingular_locus",
        claim="the supersingular locus is the zero set of A~",
        passed=len(bad) == 0,
        detail=f"{len(b[0])} points, {int(on_locus.sum())} on the locus, {len(bad)} mismatches",
        witness=witness,
        seconds=clock.seconds,
    )


def transversality_scan(p: int, scan: bool | None = None) -> CheckResult:
    """R is transversal to {A~ = 0}: R(A~) = (B~ - e2 A~)/12 and B~ is nonzero on the locus."""
    with timed() as clock:
        ab = compute_AB(p)
        e2, _, _ = GradedPoly.gens(p)
        identity_ok = fields(p).R.apply(ab.A_mod) == (ab.B_mod - e2 * ab.A_mod) * Fraction(1, 12)
        fa, fb = factor_A(p), factor_B(p)
        coprime = (
            not (set(fa.alphas) & set(fb.alphas))
            and not (fa.delta and fb.delta)
            and not (fa.epsilon and fb.epsilon)
        )
        notes = [f"R(A~) identity {'ok' if identity_ok else 'FAILED'}", f"coprime {coprime}"]
        scan_ok = True
        witness = None
        if scan is None:
            scan = p <= SCAN_BOUND
        if scan and p <= SCAN_BOUND:
            field, b, c = _bc_grid(p)
            zero = fp2_vec.const(0, b[0].shape, p)
            on_locus = fp2_vec.is_zero(fp2_vec.eval_graded(ab.A_mod, zero, b, c, field))
            b_zero = fp2_vec.is_zero(fp2_vec.eval_graded(ab.B_mod, zero, b, c, field))
            bad = np.nonzero(on_locus & b_zero)[0]
            scan_ok = len(bad) == 0
            notes.append(f"scanned {int(on_locus.sum())} locus points")
            if not scan_ok:
                i = bad[0]
                witness = {"b": str(field(int(b[0][i]), int(b[1][i]))), "c": str(field(int(c[0][i]), int(c[1][i])))}
        elif p > SCAN_BOUND:
            notes.append(f"point scan skipped (p > {SCAN_BOUND})")
    return CheckResult(
        name="transversality",
        claim="R is transversal to the supersingular locus",
        passed=identity_ok and coprime and scan_ok,
        detail="; ".join(notes),
        witness=witness,
        seconds=clock.seconds,
    )


def singular_locus_field(p: int):
    """X = R^p + (B~/12)^2 F."""
    B = compute_AB(p).B_mod
    F = fields(p).F
    scale = B * B * Fraction(1, 144)
    return rp_closed(p) + F * scale


def singular_locus_check(p: int) -> CheckResult:
    """Every image of X = R^p + (B~/12)^2 F is divisible by A~, X(e2) = -e4 A~^2/12,
    and 6 e6 X(e4) - 4 e4 X(e6) = 2 A~^2 (e4^3 - e6^2)."""
    with timed() as clock:
        A = compute_AB(p).A_mod
        _, e4, e6 = GradedPoly.gens(p)
        X = singular_locus_field(p)
        divisible = all(A.divides(img) for img in X.images)
        e2_ok = X.img2 == -(e4 * A * A) * Fraction(1, 12)
        combo = e6 * X.img4 * 6 - e4 * X.img6 * 4
        combo_ok = combo == A * A * (e4**3 - e6**2) * 2
    ok = divisible and e2_ok and combo_ok
    return CheckResult(
        name="singular_locus",
        claim="the supersingular locus is the singular set of R^p + (B~/12)^2 F",
        passed=ok,
        witness=None if ok else {"divisible": divisible, "X(e2)": e2_ok, "combination": combo_ok},
        seconds=clock.seconds,
    )
