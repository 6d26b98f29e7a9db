"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`BesselFourierError`, so callers can catch one type.  The mixin
bases (ValueError, OverflowError, ...) keep the exceptions idiomatic for
code that does not know about this package.
"""


class BesselFourierError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BesselFourierError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation was requested exactly at a pole."""


class RangeError(BesselFourierError, OverflowError):
    """An argument is so large the result would leave double range."""


class IntegrandError(BesselFourierError, ArithmeticError):
    """An integrand returned a non-finite value at an interior node."""


class ConvergenceError(BesselFourierError, RuntimeError):
    """An iterative scheme failed to reach the requested tolerance."""


class DivergenceError(ConvergenceError):
    """A series showed divergent behaviour instead of settling."""


class UnsupportedError(BesselFourierError, NotImplementedError):
    """The requested mode is outside the supported reconstruction cases."""
