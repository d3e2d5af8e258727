"""Exception hierarchy shared by every module of the package."""


class TropicalError(Exception):
    """Base class for all errors raised by :mod:`tropeig`."""


class ParseError(TropicalError, ValueError):
    pass


class InverseOfEpsilon(TropicalError, ArithmeticError):
    pass


class DimensionMismatch(TropicalError, ValueError):
    pass


class ZeroVector(TropicalError, ValueError):
    """Raised when an operation needs a vector with at least one finite entry."""


class AllEpsilon(TropicalError, ValueError):
    """Raised when a polynomial has no finite coefficient."""


class SizeLimitExceeded(TropicalError, ValueError):
    pass


class NoFiniteCycle(TropicalError, ValueError):
    pass


class PreconditionViolated(TropicalError, ValueError):
    pass


class NotAnEigenvalue(TropicalError, ValueError):
    pass


class InternalVerificationFailed(TropicalError, AssertionError):
    """A constructed object failed its own certificate. Indicates a bug."""


class SpectrumMismatch(TropicalError, ValueError):
    pass
