"""Exception hierarchy shared by the numerical layers."""


class RydbergRenyiError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RydbergRenyiError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """A gamma factor of the cosine-regime constant hits a pole.

    ``factor`` names the offending gamma argument, either
    ``"beta+1-p/2"`` (cosine-Bessel transition) or ``"1-p/2"``
    (cosine-Airy transition).
    """

    def __init__(self, message, factor):
        super().__init__(message)
        self.factor = factor


class DivergenceError(DomainError):
    """An improper integral defining a regime constant does not converge."""


class ToleranceError(RydbergRenyiError, ArithmeticError):
    """A quadrature or extrapolation could not certify the requested accuracy."""

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
