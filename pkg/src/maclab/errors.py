"""Exception types shared across the library."""


class MacLabError(Exception):
    """Base class for all library errors."""


class InvalidInputError(MacLabError):
    """Caller passed data that violates a documented precondition."""


class ZeroDenominatorError(InvalidInputError):
    """A rational function was built with denominator zero."""


class DivisionByZeroError(MacLabError):
    """Division of field elements by zero."""


class EvaluationError(MacLabError):
    """Evaluation of a rational function at a pole."""


class InvariantViolation(MacLabError):
    """An internal invariant failed; signals a bug, never bad input."""
