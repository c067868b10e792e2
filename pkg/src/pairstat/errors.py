"""Exception and warning types shared across the package."""

from __future__ import annotations


class PairstatError(Exception):
    """Base class for all package errors."""


class ConfigurationError(PairstatError):
    """Invalid or inconsistent configuration (grids, flags, mode specs)."""


class DomainError(PairstatError):
    """Argument outside the mathematical domain of an operation."""


class SingularityError(PairstatError):
    """Evaluation requested exactly at a pole of a closed-form expression."""


class TruncationError(PairstatError):
    """Probability leaked past the grid boundary exceeds the budget."""

    def __init__(self, leaked: float, budget: float, message: str | None = None):
        self.leaked = leaked
        self.budget = budget
        super().__init__(
            message
            or f"leaked probability {leaked:.3e} exceeds budget {budget:.3e}"
        )


class InsufficientDataError(PairstatError):
    """Not enough samples for a requested fit or estimate."""


class RegimeWarning(UserWarning):
    """An asymptotic formula was evaluated outside its validity regime."""
