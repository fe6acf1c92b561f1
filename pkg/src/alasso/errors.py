"""Exception taxonomy shared by all modules.

Two families: ``ValidationError`` for bad inputs (CLI exit code 2) and
``ComputationError`` for runtime failures (CLI exit code 1).
"""

from __future__ import annotations


class AlassoError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AlassoError):
    """Input violates a documented precondition or invariant."""


class ComputationError(AlassoError):
    """A computation failed at runtime despite valid inputs."""


class AntipodalPairError(ValidationError):
    """A signed model contains a variable together with its negation."""

    def __init__(self, variable: int):
        self.variable = variable
        super().__init__(
            f"signed model contains variable {variable} with both signs"
        )


class IndexOutOfRangeError(ValidationError):
    """A signed index falls outside {1..2p}."""

    def __init__(self, index: int, p: int):
        self.index = index
        self.p = p
        super().__init__(f"index {index} outside valid range 1..{2 * p}")


class InvalidDimsError(ValidationError):
    """Dimension arguments to a counting formula are out of range."""


class DomainError(ValidationError):
    """A scalar argument lies outside the formula's domain."""


class HypothesisViolatedError(ValidationError):
    """A bound was requested outside the regime where it holds."""


class TooLargeError(ValidationError):
    """Exhaustive computation requested on an instance beyond the size cap."""


class EmptyTruthError(ValidationError):
    """Relative selection error is undefined for an empty true model."""


class NotAFaceError(ValidationError):
    """A region witness was requested for an inaccessible model."""


class NonFiniteInputError(ValidationError):
    """Numeric input contains NaN or infinity."""


class NoConvergenceError(ComputationError):
    """Iterative solver exhausted its iteration budget."""

    def __init__(self, max_iters: int, detail: str = ""):
        self.max_iters = max_iters
        msg = f"no convergence within {max_iters} sweeps"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class LPUnboundedError(ComputationError):
    """The face-test program is unbounded; input is likely degenerate."""


class LPInfeasibleError(ComputationError):
    """The face-test program has no feasible point.

    Callers normally map this to a negative face test rather than
    propagating it.
    """
