"""Sparse weighted polynomials in e2, e4, e6 and derivations acting on them.

A :class:`GradedPoly` maps exponent triples ``(i, j, k)`` of
``e2^i e4^j e6^k`` to nonzero coefficients. Over Q coefficients are
:class:`~fractions.Fraction`; over F_p (``p`` set) they are ints in [0, p).
The monomial ``(i, j, k)`` has weight ``2i + 4j + 6k``.

A :class:`Derivation` is stored as its images of e2, e4, e6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InexactDivision, NonIntegralCoefficient, NotPolynomial
from .exact_arith import reduce_rational, ZeroInverse

WEIGHTS = (2, 4, 6)
VARS = ("e2", "e4", "e6")


def _norm_coeff(c, p):
    if p is None:
        return Fraction(c)
    if isinstance(c, Fraction):
        try:
            return reduce_rational(c, p)
        except ZeroInverse:
            raise NonIntegralCoefficient(f"coefficient {c} is not {p}-integral") from None
    return int(c) % p


class GradedPoly:
    __slots__ = ("terms", "p", "_hash")

    def __init__(self, terms=None, p: int | None = None):
        self.p = p
        out = {}
        if terms:
            for exp, c in terms.items():
                c = _norm_coeff(c, p)
                if c:
                    out[tuple(exp)] = c
        self.terms = out
        self._hash = None

    @classmethod
    def _raw(cls, terms, p):
        # terms already normalised and zero-free
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.p = p
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c, p=None):
        return cls({(0, 0, 0): c}, p)

    @classmethod
    def monomial(cls, exp, c=1, p=None):
        return cls({tuple(exp): c}, p)

    @classmethod
    def gens(cls, p=None):
        """Return (e2, e4, e6)."""
        return (
            cls.monomial((1, 0, 0), 1, p),
            cls.monomial((0, 1, 0), 1, p),
            cls.monomial((0, 0, 1), 1, p),
        )

    def zero(self):
        return GradedPoly._raw({}, self.p)

    def one(self):
        return GradedPoly.constant(1, self.p)

    # -- coefficient helpers ---------------------------------------------------

    def _c(self, x):
        return _norm_coeff(x, self.p)

    def _inv(self, c):
        if self.p is None:
            return 1 / c
        return pow(c, -1, self.p)

    def _lift(self, other):
        if isinstance(other, GradedPoly):
            if other.p != self.p:
                raise ValueError(f"mixing coefficient domains p={self.p} and p={other.p}")
            return other
        return GradedPoly.constant(other, self.p)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        p = self.p
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if p is not None:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return GradedPoly._raw(out, p)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        if p is None:
            return GradedPoly._raw({e: -c for e, c in self.terms.items()}, p)
        return GradedPoly._raw({e: (-c) % p for e, c in self.terms.items()}, p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedPoly):
            c = self._c(other)
            if not c:
                return self.zero()
            p = self.p
            if p is None:
                return GradedPoly._raw({e: v * c for e, v in self.terms.items()}, p)
            return GradedPoly._raw({e: v * c % p for e, v in self.terms.items()}, p)
        o = self._lift(other)
        p = self.p
        out: dict = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in o.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + x * y
        if p is not None:
            out = {e: v % p for e, v in out.items()}
        return GradedPoly._raw({e: v for e, v in out.items() if v}, p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a scalar only; use :meth:`exact_div` for polynomials."""
        if isinstance(other, GradedPoly):
            return self.exact_div(other)
        c = self._c(other)
        if not c:
            raise ZeroDivisionError("division by zero scalar")
        return self * self._inv(c)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other) -> GradedPoly:
        """The unique Q with Q*other == self; InexactDivision otherwise.

        Division algorithm with respect to lexicographic order on (i, j, k);
        for a single divisor, exact divisibility is equivalent to a zero
        remainder.
        """
        d = self._lift(other)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        lead = max(d.terms)
        inv_lc = d._inv(d.terms[lead])
        rem = dict(self.terms)
        quot = {}
        while rem:
            top = max(rem)
            shift = (top[0] - lead[0], top[1] - lead[1], top[2] - lead[2])
            if min(shift) < 0:
                raise InexactDivision(f"{d} does not divide {self}")
            q = rem[top] * inv_lc
            if p is not None:
                q %= p
            quot[shift] = q
            for (a, b, c), v in d.terms.items():
                e = (a + shift[0], b + shift[1], c + shift[2])
                nv = rem.get(e, 0) - q * v
                if p is not None:
                    nv %= p
                if nv:
                    rem[e] = nv
                else:
                    rem.pop(e, None)
        return GradedPoly._raw(quot, p)

    def divides(self, other) -> bool:
        """True when self divides other."""
        try:
            self._lift(other).exact_div(self)
        except InexactDivision:
            return False
        return True

    # -- predicates and structure -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, GradedPoly):
            return self.p == other.p and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self.terms.items())))
        return self._hash

    @staticmethod
    def weight_of(exp) -> int:
        return 2 * exp[0] + 4 * exp[1] + 6 * exp[2]

    def weights(self) -> set[int]:
        return {self.weight_of(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def degree(self) -> int | None:
        """Weighted degree of a nonzero homogeneous polynomial (None for zero)."""
        w = self.weights()
        if not w:
            return None
        if len(w) > 1:
            raise ValueError("polynomial is not homogeneous")
        return w.pop()

    def involves_e2(self) -> bool:
        return any(e[0] for e in self.terms)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def leading_exponent(self):
        return max(self.terms)

    def partial(self, idx: int) -> GradedPoly:
        """Partial derivative in e2 (idx 0), e4 (idx 1) or e6 (idx 2)."""
        p = self.p
        out = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k == 0:
                continue
            ne = list(e)
            ne[idx] -= 1
            v = c * k
            if p is not None:
                v %= p
            if v:
                out[tuple(ne)] = v
        return GradedPoly._raw(out, p)

    def evaluate(self, a, b, c):
        """Substitute field elements (or ints/fractions) for e2, e4, e6."""
        pw = ({}, {}, {})
        vals = (a, b, c)
        total = 0
        for e, coeff in self.terms.items():
            term = coeff
            for idx in range(3):
                k = e[idx]
                if k:
                    cache = pw[idx]
                    if k not in cache:
                        cache[k] = vals[idx] ** k
                    term = cache[k] * term
            total = term + total
        if self.p is not None and isinstance(total, int):
            total %= self.p
        return total

    def reduce_mod(self, p: int) -> GradedPoly:
        """Coefficientwise image in F_p; NonIntegralCoefficient names the monomial."""
        if self.p is not None:
            if self.p != p:
                raise ValueError("cannot change characteristic")
            return self
        out = {}
        for e, c in self.terms.items():
            if c.denominator % p == 0:
                raise NonIntegralCoefficient(
                    f"coefficient {c} of {_mono_str(e)} is not {p}-integral"
                )
            v = c.numerator * pow(c.denominator, -1, p) % p
            if v:
                out[e] = v
        return GradedPoly._raw(out, p)

    def sorted_terms(self):
        """Terms in descending lexicographic order of (i, j, k)."""
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            neg = self.p is None and c < 0
            mag = -c if neg else c
            mono = _mono_str(e)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f" - {body}" if neg else f" + {body}")
        return "".join(chunks)

    def __repr__(self):
        dom = "Q" if self.p is None else f"F_{self.p}"
        return f"GradedPoly[{dom}]({self})"


def _mono_str(e) -> str:
    parts = []
    for name, k in zip(VARS, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def poly_from_str(text: str, p: int | None = None) -> GradedPoly:
    """Parse the format produced by ``str(GradedPoly)``, e.g. ``"3*e6^2 + 2*e4^3"``."""
    s = text.replace(" ", "")
    if s == "0":
        return GradedPoly({}, p)
    if s[0] not in "+-":
        s = "+" + s
    terms: dict = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        chunk = s[i + 1 : j]
        i = j
        coeff = Fraction(1)
        exp = [0, 0, 0]
        for factor in chunk.split("*"):
            if factor.startswith("e"):
                name, _, k = factor.partition("^")
                exp[VARS.index(name)] += int(k) if k else 1
            else:
                coeff *= Fraction(factor)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + sign * coeff
    return GradedPoly(terms, p)


# -- derivations -------------------------------------------------------------


@dataclass(frozen=True)
class Derivation:
    """The derivation sending e2, e4, e6 to img2, img4, img6 (Leibniz extension)."""

    img2: GradedPoly
    img4: GradedPoly
    img6: GradedPoly

    @property
    def p(self):
        return self.img2.p

    @property
    def images(self):
        return (self.img2, self.img4, self.img6)

    @classmethod
    def zero(cls, p=None):
        z = GradedPoly({}, p)
        return cls(z, z, z)

    def apply(self, P: GradedPoly) -> GradedPoly:
        out = P.zero()
        for idx, img in enumerate(self.images):
            if img:
                dp = P.partial(idx)
                if dp:
                    out = out + dp * img
        return out

    __call__ = apply

    def __add__(self, other: Derivation) -> Derivation:
        return Derivation(*(a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other: Derivation) -> Derivation:
        return Derivation(*(a - b for a, b in zip(self.images, other.images)))

    def __neg__(self):
        return Derivation(*(-a for a in self.images))

    def __mul__(self, f) -> Derivation:
        """Scale by a polynomial or scalar: (f*D)(x) = f * D(x)."""
        return Derivation(*(a * f for a in self.images))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.images)

    def degree(self) -> int | None:
        """Degree d when img_i is homogeneous of weight d + w_i; None for zero."""
        ds = set()
        for w, img in zip(WEIGHTS, self.images):
            if img.is_zero():
                continue
            if not img.is_homogeneous():
                raise ValueError("derivation is not homogeneous")
            ds.add(img.degree() - w)
        if len(ds) > 1:
            raise ValueError("derivation is not homogeneous")
        return ds.pop() if ds else None

    def is_homogeneous(self) -> bool:
        try:
            self.degree()
        except ValueError:
            return False
        return True

    def __str__(self):
        return "; ".join(f"{v} -> {img}" for v, img in zip(VARS, self.images))


def derivation_apply(D: Derivation, P: GradedPoly) -> GradedPoly:
    return D.apply(P)


def derivation_bracket(D1: Derivation, D2: Derivation) -> Derivation:
    """[D1, D2](e_i) = D1(D2(e_i)) - D2(D1(e_i))."""
    return Derivation(
        *(D1.apply(b) - D2.apply(a) for a, b in zip(D1.images, D2.images))
    )


def iterate_apply(D: Derivation, P: GradedPoly, k: int) -> GradedPoly:
    for _ in range(k):
        P = D.apply(P)
    return P


def derivation_power(D: Derivation, k: int) -> tuple[Derivation, bool]:
    """Images of e2, e4, e6 under the k-fold composite of D.

    The composite is a derivation only for k = 1 or k = p over F_p; the
    returned flag says whether the Leibniz rule was certified on the sample
    products e2*e4 and e4*e6.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    e2, e4, e6 = GradedPoly.gens(D.p)
    Dk = Derivation(*(iterate_apply(D, g, k) for g in (e2, e4, e6)))
    certified = all(
        iterate_apply(D, s, k) == Dk.apply(s) for s in (e2 * e4, e4 * e6)
    )
    return Dk, certified


class Fields(NamedTuple):
    R: Derivation
    F: Derivation
    H: Derivation
    serre: Derivation


def make_fields(p: int | None = None) -> Fields:
    """The Ramanujan field R, the sl2 partners F and H, and the Ramanujan-Serre field.

    The Ramanujan-Serre field is extended to e2 by zero. The identity
    12*R = serre + e2*H holds on e4 and e6 (not on e2, where 12*R(e2) is
    e2^2 - e4); a RuntimeError is raised if that restricted check fails.
    """
    e2, e4, e6 = GradedPoly.gens(p)
    zero = e2.zero()
    R = Derivation(
        (e2 * e2 - e4) * Fraction(1, 12),
        (e2 * e4 - e6) * Fraction(1, 3),
        (e2 * e6 - e4 * e4) * Fraction(1, 2),
    )
    F = Derivation(GradedPoly.constant(-12, p), zero, zero)
    H = Derivation(e2 * 2, e4 * 4, e6 * 6)
    serre = Derivation(zero, e6 * -4, e4 * e4 * -6)
    split = serre + H * e2
    if (R * 12).images[1:] != split.images[1:]:
        raise RuntimeError("12 R != serre + e2 H on e4, e6")
    return Fields(R, F, H, serre)


_fields_cache: dict = {}


def fields(p: int | None = None) -> Fields:
    if p not in _fields_cache:
        _fields_cache[p] = make_fields(p)
    return _fields_cache[p]


# -- decomposition in the (R, F, H) basis ----------------------------------


@dataclass(frozen=True)
class BasisDecomposition:
    r1: GradedPoly
    r2: GradedPoly
    r3: GradedPoly
    certified: bool

    def as_tuple(self):
        return (self.r1, self.r2, self.r3)


def _det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def basis_decompose(X: Derivation) -> BasisDecomposition:
    """Write X = r1*R + r2*F + r3*H with polynomial r_i, via Cramer's rule.

    The system's determinant is 24*(e4^3 - e6^2); each Cramer numerator must
    be exactly divisible by it, otherwise NotPolynomial is raised.
    """
    R, F, H, _ = fields(X.p)
    cols = [R.images, F.images, H.images]
    det = _det3([[cols[c][r] for c in range(3)] for r in range(3)])
    _, e4, e6 = GradedPoly.gens(X.p)
    expected = (e4**3 - e6**2) * 24
    if det != expected:
        raise RuntimeError("unexpected determinant for the (R, F, H) frame")
    coeffs = []
    for slot in range(3):
        m_cols = list(cols)
        m_cols[slot] = X.images
        num = _det3([[m_cols[c][r] for c in range(3)] for r in range(3)])
        try:
            coeffs.append(num.exact_div(det))
        except InexactDivision:
            raise NotPolynomial(
                f"coefficient {slot + 1} is not a polynomial"
            ) from None
    r1, r2, r3 = coeffs
    certified = R * r1 + F * r2 + H * r3 == X
    return BasisDecomposition(r1, r2, r3, certified)


def recompose(r1, r2, r3, p=None) -> Derivation:
    R, F, H, _ = fields(p)
    return R * r1 + F * r2 + H * r3
