"""Exception hierarchy shared by the numerical kernels."""


class EddyError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(EddyError, ValueError):
    """One or more physical or geometric inputs are outside their domain.

    ``violations`` holds one human-readable message per offending field.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DomainError(EddyError, ValueError):
    """An argument lies outside the domain of an operation."""


class NumericalFailure(EddyError, ArithmeticError):
    """A series, continued fraction or linear solve did not produce a finite result."""


class SingularityError(NumericalFailure):
    """Division by a (numerically) vanishing Bessel value."""


class SingularSystemError(NumericalFailure):
    """A linear system for solution coefficients is singular."""
