"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument or field is outside the modeled domain."""


class InfeasibleBuckError(DomainError):
    """Requested output voltage exceeds the input; a buck stage only steps down."""


class SimulationError(RuntimeError):
    """A simulation step failed; carries the step index where it happened."""

    def __init__(self, message: str, step_index: int):
        super().__init__(message)
        self.step_index = step_index
