"""Exception types raised across the package."""


class SingPolyError(ValueError):
    """Base class for domain errors."""


# scalar
class ZeroDenominator(SingPolyError, ZeroDivisionError):
    pass


class PoleAt(SingPolyError, ArithmeticError):
    def __init__(self, k0, exponent=None):
        self.k0 = k0
        self.exponent = exponent
        msg = f"pole at kappa = {k0}"
        if exponent is not None:
            msg += f" in the coefficient of x^{exponent}"
        super().__init__(msg)


class ZeroFunction(SingPolyError):
    pass


class PoleTooDeep(SingPolyError, ArithmeticError):
    def __init__(self, k0, order, k, exponent=None):
        self.k0, self.order, self.k, self.exponent = k0, order, k, exponent
        msg = f"vanishing order {order} at {k0} is below -{k}"
        if exponent is not None:
            msg += f" (monomial {exponent})"
        super().__init__(msg)


# comb / poly
class IndexOutOfRange(SingPolyError, IndexError):
    pass


class WeightMismatch(SingPolyError):
    pass


class ZeroComposition(SingPolyError):
    pass


class NonIntegralIndex(SingPolyError):
    pass


class InvalidPair(SingPolyError):
    pass


class ArityMismatch(SingPolyError):
    pass


# jack / singular
class InvalidParameters(SingPolyError):
    pass


class ClassificationMismatch(SingPolyError):
    pass


class NotInvariant(SingPolyError):
    pass


class InconsistentSpectrum(SingPolyError):
    pass


class PreconditionViolated(SingPolyError):
    pass


class UnexpectedZero(SingPolyError, ArithmeticError):
    pass
