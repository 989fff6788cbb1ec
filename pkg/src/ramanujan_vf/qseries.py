"""Truncated q-expansions, Eisenstein series and the map e2, e4, e6 -> E2, E4, E6."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegralCoefficient, PrecisionZero
from .exact_arith import bernoulli, divisor_sigma
from .graded import GradedPoly
from .report import CheckResult, timed


def _norm(c, p):
    if p is None:
        return Fraction(c)
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise NonIntegralCoefficient(f"coefficient {c} is not {p}-integral")
        return c.numerator * pow(c.denominator, -1, p) % p
    return int(c) % p


class QSeries:
    """a_0 + a_1 q + ... + a_{N-1} q^{N-1} + O(q^N).

    ``p is None`` means rational coefficients, otherwise ints mod p. The
    precision N is the number of known coefficients; arithmetic truncates
    to the smaller precision of its operands.
    """

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int | None = None):
        self.p = p
        self.coeffs = tuple(_norm(c, p) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs, p):
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.p = p
        return obj

    @classmethod
    def constant(cls, c, N, p=None):
        return cls([c] + [0] * (N - 1), p)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def _lift(self, other):
        if isinstance(other, QSeries):
            if other.p != self.p:
                raise ValueError("mismatched coefficient domains")
            if not other.coeffs or not self.coeffs:
                raise PrecisionZero("series with no known coefficients")
            return other
        return QSeries.constant(other, self.precision, self.p)

    def _mod(self, vals):
        if self.p is None:
            return vals
        return [v % self.p for v in vals]

    def __add__(self, other):
        o = self._lift(other)
        n = min(self.precision, o.precision)
        return QSeries._raw(self._mod([a + b for a, b in zip(self.coeffs[:n], o.coeffs[:n])]), self.p)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(self._mod([-a for a in self.coeffs]), self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = _norm(other, self.p)
            return QSeries._raw(self._mod([a * c for a in self.coeffs]), self.p)
        o = self._lift(other)
        n = min(self.precision, o.precision)
        a, b = self.coeffs, o.coeffs
        out = []
        for k in range(n):
            s = 0
            for i in range(k + 1):
                ai = a[i]
                if ai:
                    s += ai * b[k - i]
            out.append(s)
        return QSeries._raw(self._mod(out), self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = QSeries.constant(1, self.precision, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def truncate(self, N: int) -> QSeries:
        return QSeries._raw(self.coeffs[:N], self.p)

    def reduce_mod(self, p: int) -> QSeries:
        if self.p is not None:
            if self.p != p:
                raise ValueError("cannot change characteristic")
            return self
        return QSeries(self.coeffs, p)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def compare(self, other) -> SeriesComparison:
        """Coefficientwise comparison up to the common precision."""
        o = self._lift(other)
        n = min(self.precision, o.precision)
        for k in range(n):
            if self.coeffs[k] != o.coeffs[k]:
                return SeriesComparison(False, n, k)
        return SeriesComparison(True, n, None)

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            neg = self.p is None and c < 0
            mag = -c if neg else c
            body = str(mag) if (mag != 1 or n == 0) else ""
            body += mono
            if not terms:
                terms.append(f"-{body}" if neg else body)
            else:
                terms.append(f" - {body}" if neg else f" + {body}")
        return "".join(terms) if terms else "0"

    def __repr__(self):
        return f"QSeries({self} + O(q^{self.precision}))"


@dataclass(frozen=True)
class SeriesComparison:
    equal: bool
    precision: int
    first_mismatch: int | None

    def __bool__(self):
        return self.equal


@lru_cache(maxsize=None)
def _eisenstein_cached(nu: int, N: int) -> QSeries:
    factor = Fraction(-2 * nu) / bernoulli(nu)
    coeffs = [Fraction(1)] + [factor * divisor_sigma(nu - 1, n) for n in range(1, N)]
    return QSeries._raw(coeffs, None)


def eisenstein(nu: int, N: int, p: int | None = None) -> QSeries:
    """E_nu = 1 - (2 nu / B_nu) sum sigma_{nu-1}(n) q^n to N coefficients.

    With ``p`` the rational expansion is reduced mod p.
    """
    if nu < 2 or nu % 2:
        raise ValueError(f"weight must be even and >= 2, got {nu}")
    if N < 1:
        raise PrecisionZero("precision must be at least 1")
    series = _eisenstein_cached(nu, N)
    return series if p is None else series.reduce_mod(p)


def theta(f: QSeries) -> QSeries:
    """q d/dq: a_n -> n a_n."""
    return QSeries._raw(f._mod([n * c for n, c in enumerate(f.coeffs)]), f.p)


def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def series_scale(f, c):
    return f * c


class _PhiContext:
    """Cached powers of E2, E4, E6 at one precision and coefficient domain."""

    def __init__(self, N, p):
        self.N, self.p = N, p
        self.base = tuple(eisenstein(nu, N, p) for nu in (2, 4, 6))
        self.powers = ({}, {}, {})

    def power(self, idx, k):
        cache = self.powers[idx]
        if k not in cache:
            if k == 0:
                cache[k] = QSeries.constant(1, self.N, self.p)
            elif k == 1:
                cache[k] = self.base[idx]
            else:
                half = self.power(idx, k // 2)
                sq = half * half
                cache[k] = sq * self.base[idx] if k % 2 else sq
        return cache[k]


@lru_cache(maxsize=64)
def _phi_context(N, p):
    return _PhiContext(N, p)


def phi_eval(P: GradedPoly, N: int, p: int | None = None) -> QSeries:
    """Substitute E2, E4, E6 for e2, e4, e6, to N coefficients.

    A polynomial over F_p is evaluated with the reduced Eisenstein series.
    A rational polynomial with ``p`` given is evaluated over Q and the result
    reduced (NonIntegralCoefficient if some coefficient is not p-integral).
    """
    if N < 1:
        raise PrecisionZero("precision must be at least 1")
    dom = P.p
    ctx = _phi_context(N, dom)
    acc = [0] * N
    for (i, j, k), c in P.terms.items():
        s = ctx.power(0, i) * ctx.power(1, j) * ctx.power(2, k)
        for n, v in enumerate(s.coeffs):
            acc[n] += c * v
    if dom is not None:
        acc = [v % dom for v in acc]
    result = QSeries._raw([Fraction(v) if dom is None else v for v in acc], dom)
    if p is not None and dom is None:
        result = result.reduce_mod(p)
    return result


def rs_derivative_q(f: QSeries, nu: int) -> QSeries:
    """Ramanujan-Serre derivative 12 theta f - nu E2 f."""
    E2 = eisenstein(2, f.precision, f.p)
    return theta(f) * 12 - E2 * f * nu


def verify_ramanujan_system(N: int) -> CheckResult:
    """theta E2 = (E2^2 - E4)/12, theta E4 = (E2 E4 - E6)/3, theta E6 = (E2 E6 - E4^2)/2."""
    with timed() as clock:
        E2, E4, E6 = (eisenstein(nu, N) for nu in (2, 4, 6))
        pairs = {
            "E2": (theta(E2), (E2 * E2 - E4) * Fraction(1, 12)),
            "E4": (theta(E4), (E2 * E4 - E6) * Fraction(1, 3)),
            "E6": (theta(E6), (E2 * E6 - E4 * E4) * Fraction(1, 2)),
        }
        failure = None
        for name, (lhs, rhs) in pairs.items():
            cmp = lhs.compare(rhs)
            if not cmp.equal:
                failure = {"series": name, "coefficient": cmp.first_mismatch}
                break
    return CheckResult(
        name="ramanujan_system",
        claim="theta acts on E2, E4, E6 as the Ramanujan vector field",
        passed=failure is None,
        detail=f"checked to precision {N}",
        witness=failure,
        seconds=clock.seconds,
    )
