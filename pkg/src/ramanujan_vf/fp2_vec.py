"""Vectorised F_{p^2} arithmetic on numpy arrays.

An array of field elements is a pair ``(re, im)`` of int64 arrays holding
``re + im*s`` with ``s^2 = n``. Used by the exhaustive point scans, where
looping over p^2 or p^4 points one Python object at a time is too slow.
Residues stay below p < 10^4, so every intermediate product fits in int64.
"""

from __future__ import annotations

import numpy as np

from .exact_arith import Fp2, Fp2Element


def const(value, shape, p):
    if isinstance(value, Fp2Element):
        re, im = value.a, value.b
    else:
        re, im = int(value) % p, 0
    return (np.full(shape, re, dtype=np.int64), np.full(shape, im, dtype=np.int64))


def add(x, y, p):
    return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)


def sub(x, y, p):
    return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)


def scale(x, c: int, p):
    c %= p
    return (x[0] * c % p, x[1] * c % p)


def mul(x, y, p, n):
    a, b = x
    c, d = y
    return ((a * c + (b * d % p) * n) % p, (a * d + b * c) % p)


def power(x, e: int, p, n):
    result = const(1, x[0].shape, p)
    base = x
    while e:
        if e & 1:
            result = mul(result, base, p, n)
        base = mul(base, base, p, n)
        e >>= 1
    return result


def is_zero(x):
    return (x[0] == 0) & (x[1] == 0)


def all_elements(field: Fp2):
    """Every element of F_{p^2}, in the same (b, a) order as ``Fp2.elements``."""
    p = field.p
    im, re = np.divmod(np.arange(p * p, dtype=np.int64), p)
    return (re, im)


def to_elements(x, field: Fp2):
    return [field(int(a), int(b)) for a, b in zip(x[0].ravel(), x[1].ravel())]


def eval_univariate(coeffs, x, field: Fp2):
    """Horner evaluation of sum coeffs[i] t^i (coeffs low to high) at every entry of x."""
    p, n = field.p, field.n
    acc = const(0, x[0].shape, p)
    for c in reversed(coeffs):
        acc = add(mul(acc, x, p, n), const(c, x[0].shape, p), p)
    return acc


def eval_graded(P, a, b, c, field: Fp2):
    """Evaluate a GradedPoly over F_p at arrays of F_{p^2} points (a, b, c)."""
    p, n = field.p, field.n
    shape = a[0].shape
    caches = ({0: const(1, shape, p)}, {0: const(1, shape, p)}, {0: const(1, shape, p)})
    coords = (a, b, c)

    def pw(idx, k):
        cache = caches[idx]
        if k not in cache:
            cache[k] = mul(pw(idx, k - 1), coords[idx], p, n)
        return cache[k]

    acc = const(0, shape, p)
    for (i, j, k), coeff in P.terms.items():
        term = mul(mul(pw(0, i), pw(1, j), p, n), pw(2, k), p, n)
        acc = add(acc, scale(term, int(coeff), p), p)
    return acc


def grid(values, dims: int):
    """Cartesian power of a 1-d element array: ``dims`` coordinate pair-arrays."""
    re, im = values
    idx = np.indices((len(re),) * dims).reshape(dims, -1)
    return [(re[ix], im[ix]) for ix in idx]


def base_field_elements(p: int):
    re = np.arange(p, dtype=np.int64)
    return (re, np.zeros_like(re))
