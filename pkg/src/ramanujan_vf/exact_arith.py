"""Exact arithmetic: rationals, Bernoulli numbers, divisor sums, F_p and F_{p^2}.

Rationals are :class:`fractions.Fraction` throughout. Prime-field and
quadratic-extension elements are small immutable value objects with the
usual operators overloaded; plain ``int`` operands are coerced.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .errors import NotPrime, ZeroInverse

BigRational = Fraction

_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Return B_n from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1 (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("bernoulli index must be non-negative")
    cache = _bernoulli_cache
    for m in range(len(cache), n + 1):
        acc = sum(comb(m + 1, k) * cache[k] for k in range(m))
        cache.append(-acc / (m + 1))
    return cache[n]


def divisor_sigma(mu: int, n: int) -> int:
    """Sum of d**mu over the positive divisors d of n."""
    if n < 1:
        raise ValueError("divisor_sigma needs n >= 1")
    total = 0
    r = isqrt(n)
    for d in range(1, r + 1):
        if n % d == 0:
            total += d**mu
            e = n // d
            if e != d:
                total += e**mu
    return total


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_prime(p: int) -> int:
    """Validate a working characteristic: prime and at least 5."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrime(f"{p!r} is not an integer")
    if p < 5 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime >= 5")
    return p


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p >= 5 with lo <= p <= hi."""
    return [q for q in range(max(lo, 5), hi + 1) if is_prime(q)]


def mod_inverse(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(x, -1, p)


def reduce_rational(x: Fraction | int, p: int) -> int:
    """Image of a p-integral rational in F_p (as an int in [0, p))."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroInverse(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, p) % p


# -- prime field ------------------------------------------------------------


class FpElement:
    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError("mismatched moduli")
            return other.residue
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.residue, self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * fp_invert(FpElement(o, self.modulus))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o, self.modulus) * fp_invert(self)

    def __pow__(self, e: int):
        if e < 0:
            return fp_invert(self) ** (-e)
        return FpElement(pow(self.residue, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return (self.residue - other) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"FpElement({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


def fp_invert(x: FpElement) -> FpElement:
    if x.residue == 0:
        raise ZeroInverse(f"0 has no inverse mod {x.modulus}")
    return FpElement(pow(x.residue, -1, x.modulus), x.modulus)


class PrimeField:
    """F_p for a prime p >= 5."""

    def __init__(self, p: int):
        self.p = require_prime(p)

    def __call__(self, x) -> FpElement:
        if isinstance(x, FpElement):
            return x
        if isinstance(x, Fraction):
            return FpElement(reduce_rational(x, self.p), self.p)
        return FpElement(int(x), self.p)

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def elements(self):
        return [FpElement(a, self.p) for a in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# -- quadratic extension ----------------------------------------------------


def smallest_nonresidue(p: int) -> int:
    squares = {x * x % p for x in range(p)}
    return next(n for n in range(2, p) if n not in squares)


class Fp2Element:
    """a + b*s in F_p[s]/(s^2 - n)."""

    __slots__ = ("a", "b", "p", "n")

    def __init__(self, a: int, b: int, p: int, n: int):
        self.a = a % p
        self.b = b % p
        self.p = p
        self.n = n

    def _coerce(self, other):
        if isinstance(other, Fp2Element):
            if other.p != self.p:
                raise ValueError("mismatched characteristics")
            return other.a, other.b
        if isinstance(other, FpElement):
            return other.residue, 0
        if isinstance(other, int):
            return other, 0
        return None

    def _new(self, a, b):
        return Fp2Element(a, b, self.p, self.n)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.a + o[0], self.b + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.a - o[0], self.b - o[1])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(o[0] - self.a, o[1] - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c, d = o
        return self._new(self.a * c + self.b * d * self.n, self.a * d + self.b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.a, -self.b)

    def norm(self) -> int:
        return (self.a * self.a - self.n * self.b * self.b) % self.p

    def inverse(self) -> Fp2Element:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroInverse("0 has no inverse in F_p^2")
        inv = pow(nrm, -1, self.p)
        return self._new(self.a * inv, -self.b * inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self._new(*o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(*o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._new(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> Fp2Element:
        # s^p = n^((p-1)/2) s = -s
        return self._new(self.a, -self.b)

    def in_base_field(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a - o[0]) % self.p == 0 and (self.b - o[1]) % self.p == 0

    def __hash__(self):
        return hash((self.a, self.b, self.p))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sort_key(self):
        return (self.b, self.a)

    def __repr__(self):
        return f"Fp2Element({self.a}, {self.b}; p={self.p}, n={self.n})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        tail = "s" if self.b == 1 else f"{self.b}*s"
        return tail if self.a == 0 else f"{self.a}+{tail}"


class Fp2:
    """F_{p^2} = F_p[s]/(s^2 - n), n the smallest quadratic non-residue mod p."""

    def __init__(self, p: int):
        self.p = require_prime(p)
        self.n = smallest_nonresidue(p)

    def __call__(self, a, b: int = 0) -> Fp2Element:
        if isinstance(a, Fp2Element):
            return a
        if isinstance(a, FpElement):
            a = a.residue
        elif isinstance(a, Fraction):
            a = reduce_rational(a, self.p)
        return Fp2Element(int(a), b, self.p, self.n)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        """All p^2 elements, ordered by (b, a) so that F_p comes first."""
        p, n = self.p, self.n
        return [Fp2Element(a, b, p, n) for b in range(p) for a in range(p)]

    def __eq__(self, other):
        return isinstance(other, Fp2) and other.p == self.p

    def __hash__(self):
        return hash(("F2", self.p))

    def __repr__(self):
        return f"Fp2({self.p}, n={self.n})"


@lru_cache(maxsize=None)
def fp2_construct(p: int) -> Fp2:
    return Fp2(p)
