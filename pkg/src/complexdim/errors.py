"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ComplexDimError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ComplexDimError):
    """Bad user input: the CLI maps these to exit code 1."""


class ParseError(InputError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class ExprSyntaxError(ParseError):
    pass


class DomainError(ParseError):
    """sqrt of a non-positive integer."""


class DivisionByZero(InputError, ZeroDivisionError):
    def __init__(self, message: str = "division by zero", position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class NoSolution(ComplexDimError):
    """The right-hand side is not in the column space."""


class InvalidForcedI(InputError):
    pass


class BudgetExceeded(ComplexDimError):
    pass


class RankDeficient(InputError):
    pass


class PrecisionExhausted(ComplexDimError):
    pass


class DegenerateImage(ComplexDimError):
    pass


class InternalInvariantViolation(ComplexDimError):
    """An exact identity that must hold did not; always a bug."""
