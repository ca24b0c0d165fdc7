"""Exception types shared across the package.

CLI exit-code mapping: DomainError -> 2, usage errors -> 64,
PrecisionError / SingularityError / ZeroValueError -> 70.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation.

    Carries the admissible interval when one exists, so callers (and the
    CLI) can report what would have been accepted.
    """

    def __init__(self, message, interval=None):
        if interval is not None:
            message = f"{message} (admissible: {interval})"
        super().__init__(message)
        self.interval = interval


class PrecisionError(ArithmeticError):
    """A floating-point result could not be certified to the required
    accuracy (e.g. an integer-valued product drifted beyond the rounding
    window)."""


class SingularityError(ArithmeticError):
    """Quadrature sampler hit too many zeros; the integrand is likely
    identically zero or singular beyond repair."""


class ZeroValueError(ArithmeticError):
    """Evaluation produced an exact zero where a logarithm is required
    (e.g. normalized log of a vanishing colored Jones value)."""
