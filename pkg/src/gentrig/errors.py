"""Exception types shared by every module in the package."""


class GenTrigError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GenTrigError, ValueError):
    """An input lies outside the mathematical domain of the operation."""


class ConvergenceError(GenTrigError, RuntimeError):
    """An iterative computation did not reach the requested accuracy.

    ``partial`` holds the best result obtained before giving up (a float,
    a SeriesValue or a QuadratureResult depending on the caller).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedOperationError(GenTrigError, NotImplementedError):
    """The requested combination (e.g. function kind and parameter axis)
    has no implemented closed form."""
