"""Exception taxonomy shared across the package."""


class AfflatError(Exception):
    pass


class InputError(AfflatError, ValueError):
    """Malformed or precondition-violating input."""


class NotInClass(AfflatError, ValueError):
    """Input is well-formed but outside the class an operation handles
    (trivial angle, degenerate triangle, conic without rational points, ...)."""


class SearchBudgetExceeded(AfflatError, RuntimeError):
    """An enumeration-based search passed the configured denominator cap."""


class InternalCheckError(AfflatError, AssertionError):
    """A result failed its own verification; indicates a bug, not bad input."""
