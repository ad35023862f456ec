"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI: DomainError and ParseError map to 2,
PoleError and ConvergenceError map to 3.
"""


class MopsError(Exception):
    """Base class for all library errors."""


class DomainError(MopsError):
    """Input outside the mathematical domain of an operation."""


class PoleError(MopsError):
    """A denominator vanished at the requested parameter point."""


class ConvergenceError(MopsError):
    """A truncated series did not reach the requested tolerance.

    Carries the partial value so callers can still inspect it.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedModeError(MopsError):
    """Operation not defined for the requested variable-count mode."""


class ParseError(MopsError):
    """Syntax error in an expression, with position and expectations."""

    def __init__(self, message, position, expected=()):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected)
