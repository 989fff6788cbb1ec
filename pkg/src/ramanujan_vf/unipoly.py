"""Univariate polynomials over F_p or F_{p^2} in the variable t."""

from __future__ import annotations

from .errors import CoercionFailure
from .exact_arith import Fp2, Fp2Element, FpElement, PrimeField, fp2_construct
from . import fp2_vec


class UniPoly:
    """Dense polynomial with coefficients (low degree first) in a finite field.

    ``field`` is a :class:`PrimeField` or :class:`Fp2`; coefficients are the
    matching element objects. Trailing zeros are stripped, so the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def from_roots(cls, roots, field):
        poly = cls([1], field)
        for r in roots:
            poly = poly * cls([-r, 1], field)
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1]

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.field)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        zero = self.field.zero
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = o.coeffs + (zero,) * (n - len(o.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly([1], self.field)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        lead = self.leading()
        return UniPoly([c / lead for c in self.coeffs], self.field)

    def divmod_linear(self, r):
        """Synthetic division by (t - r): returns (quotient, remainder)."""
        out = []
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop() if out else self.field.zero
        return UniPoly(list(reversed(out)), self.field), rem

    def derivative(self) -> UniPoly:
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def extension_field(self) -> Fp2:
        return fp2_construct(self.field.p)

    def roots(self, multiplicities: bool = False):
        """All roots in F_{p^2}, by exhaustive evaluation at the p^2 elements.

        Roots are sorted by (imaginary, real) part. With ``multiplicities``
        the result is a list of ``(root, multiplicity)`` pairs.
        """
        if not self.coeffs:
            raise ValueError("the zero polynomial has every element as a root")
        ext = self.extension_field()
        pts = fp2_vec.all_elements(ext)
        vals = fp2_vec.eval_univariate([ext(c) for c in self.coeffs], pts, ext)
        hits = fp2_vec.is_zero(vals)
        found = [ext(int(a), int(b)) for a, b in zip(pts[0][hits], pts[1][hits])]
        found.sort(key=Fp2Element.sort_key)
        if not multiplicities:
            return found
        lifted = self.to_fp2()
        out = []
        for r in found:
            k = 0
            q = lifted
            while True:
                q2, rem = q.divmod_linear(r)
                if rem:
                    break
                k += 1
                q = q2
            out.append((r, k))
        return out

    def to_fp2(self) -> UniPoly:
        ext = self.extension_field()
        return UniPoly([ext(c) for c in self.coeffs], ext)

    def to_fp(self) -> UniPoly:
        """Coerce F_{p^2} coefficients into F_p; CoercionFailure if impossible."""
        base = PrimeField(self.field.p)
        out = []
        for c in self.coeffs:
            if isinstance(c, Fp2Element):
                if c.b != 0:
                    raise CoercionFailure(f"coefficient {c} is not in F_{self.field.p}")
                out.append(c.a)
            else:
                out.append(int(c))
        return UniPoly(out, base)

    def is_squarefree(self) -> bool:
        """True when every root in F_{p^2} is simple and there are deg-many of them."""
        if self.degree <= 0:
            return True
        rm = self.roots(multiplicities=True)
        return all(k == 1 for _, k in rm) and len(rm) == self.degree

    def residues(self) -> list[int]:
        """Coefficients as integers in [0, p), low degree first (F_p only)."""
        return [int(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if isinstance(c, Fp2Element) and c.a and c.b:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            parts.append(mono if cs == "1" else f"{cs}{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self})"


def fp_poly(coeffs, p: int) -> UniPoly:
    return UniPoly(coeffs, PrimeField(p))


__all__ = ["UniPoly", "fp_poly", "FpElement"]
