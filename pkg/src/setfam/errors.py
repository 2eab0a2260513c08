"""Exception types shared across the package."""


class SetfamError(Exception):
    """Base class for all package errors."""


class UniverseMismatchError(SetfamError, ValueError):
    """Two families with different universe sizes were combined."""


class ParamRangeError(SetfamError, ValueError):
    """A parameter violates the validity range of the requested formula
    or construction.  The message names the violated constraint."""


class FamilyFormatError(SetfamError, ValueError):
    """Malformed family text."""


class InfeasibleInstanceError(SetfamError, RuntimeError):
    """The instance exceeds the structural limits of the chosen engine."""


class TimeBudgetExceededError(SetfamError, RuntimeError):
    """Search ran out of wall-clock budget.  Carries the best value seen so
    far; partial results are never silently reported as complete."""

    def __init__(self, message: str, best_so_far: int | None = None):
        super().__init__(message)
        self.best_so_far = best_so_far
