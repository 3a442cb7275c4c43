"""Exception types shared across the package."""

from __future__ import annotations


class VacuumPressureError(Exception):
    """Base class for all package errors."""


class DomainError(VacuumPressureError, ValueError):
    """An input lies outside the domain where a quantity is defined."""


class NumericalError(VacuumPressureError, ArithmeticError):
    """A numerical procedure failed to meet its tolerance.

    ``best_estimate`` carries whatever value the procedure had reached.
    """

    def __init__(self, message: str, best_estimate: float | None = None):
        super().__init__(message)
        self.best_estimate = best_estimate


class BracketError(VacuumPressureError, ValueError):
    """The supplied bracket does not enclose a sign change."""


class TableParseError(VacuumPressureError, ValueError):
    """Malformed tabulated permittivity input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
