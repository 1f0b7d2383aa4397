"""
This module defines the exceptions raised by the energy game solvers.

Library code raises these; only the command line front door turns them into
exit codes.
"""
from typing import Iterable, List, Optional, Sequence


class EnergyGameError(Exception):
    """
    Base exception for every error raised by the energy_games package.
    """
    def __init__(self, message="An error occurred while processing the game instance."):
        super().__init__(message)


class ParseError(EnergyGameError):
    """
    Custom exception raised when an instance file cannot be parsed.
    """
    def __init__(self, reason: str, line_number: Optional[int] = None):
        self.reason = reason
        self.line_number = line_number
        message = f"line {line_number}: {reason}" if line_number is not None else reason
        super().__init__(message)


class ValidationError(EnergyGameError):
    """
    Custom exception raised when a graph breaks a structural rule, e.g. an edge
    weight above the declared maximum or a vertex without outgoing edges.
    """
    def __init__(self, violations: Iterable[str] = ()):
        self.violations: List[str] = list(violations)
        message = "Graph validation failed"
        if self.violations:
            message += ": " + "; ".join(self.violations)
        super().__init__(message)


class PreconditionError(EnergyGameError):
    """
    Custom exception raised when the instance is well formed but the requested
    algorithm does not apply to it.
    """
    def __init__(self, message="The instance does not satisfy the precondition of the requested algorithm."):
        super().__init__(message)


class OwnerMismatchError(PreconditionError):
    """
    Custom exception raised when a special-case solver receives a vertex owned
    by the wrong player.
    """
    def __init__(self, expected: str, offending: Sequence[int]):
        self.expected = expected
        self.offending = list(offending)
        shown = ", ".join(str(v) for v in self.offending[:10])
        super().__init__(f"Expected every vertex to be owned by {expected}; offending vertices: {shown}")


class BudgetExceededError(PreconditionError):
    """
    Custom exception raised when exhaustive strategy enumeration would exceed
    the configured budget.
    """
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"Brute force needs {required} strategy pairs but the budget is {budget}. "
            "Shrink the instance or raise ENERGY_GAMES_BRUTE_FORCE_BUDGET."
        )


class NegativeCycleError(PreconditionError):
    """
    Custom exception raised when a graph that must be free of negative cycles
    contains one. The witness cycle is kept on the exception.
    """
    def __init__(self, cycle: Sequence[int], weight: int):
        self.cycle = list(cycle)
        self.weight = weight
        path = " -> ".join(str(v) for v in self.cycle)
        super().__init__(f"Negative cycle of weight {weight} found: {path}")


class InvariantViolationError(EnergyGameError):
    """
    Custom exception raised when an internal correctness assertion fails.
    This always points at an implementation bug.
    """
    def __init__(self, message="An internal invariant of the solver was violated."):
        super().__init__(message)
