"""Exception hierarchy shared by every numerical slice."""


class QHarmonicError(Exception):
    """Base class for all errors raised by the package."""


class QDomainError(QHarmonicError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class PoleError(QDomainError):
    """Raised when a q-exponential or q-product is evaluated at a pole or a zero factor."""


class TruncationError(QHarmonicError, ArithmeticError):
    """Raised when a series does not settle within the configured number of terms."""

    def __init__(self, message: str, *, partial_sum: float, terms: int) -> None:
        super().__init__(message)
        self.partial_sum = partial_sum
        self.terms = terms


class DivergenceWarning(RuntimeWarning):
    """Emitted when an infinite Jackson sum has not decayed at its coarse end."""


class CheckSkipped(QHarmonicError):
    """Raised by a verification check that does not apply to the current context."""
