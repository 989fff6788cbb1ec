"""Exception types raised across the package."""


class RamanujanError(Exception):
    """Base class for all errors raised by ramanujan_vf."""


class ZeroInverse(RamanujanError, ZeroDivisionError):
    pass


class NotPrime(RamanujanError, ValueError):
    pass


class PrecisionZero(RamanujanError, ValueError):
    pass


class InsufficientPrecision(RamanujanError, ValueError):
    pass


class NonIntegralCoefficient(RamanujanError, ValueError):
    pass


class InexactDivision(RamanujanError, ArithmeticError):
    pass


class NotPolynomial(RamanujanError, ArithmeticError):
    """A derivation is not in the polynomial span of R, F, H."""


class NotModularOfWeight(RamanujanError, ValueError):
    pass


class BoundExceeded(RamanujanError, ValueError):
    pass


class CoercionFailure(RamanujanError, ValueError):
    """A coefficient expected in F_p lies outside it."""


class NotHomogeneous(RamanujanError, ValueError):
    pass


class NotBivariate(RamanujanError, ValueError):
    """A polynomial expected in e4, e6 only involves e2."""


class OnDiscriminant(RamanujanError, ValueError):
    """The point lies on the excluded locus e4^3 = e6^2."""
