"""Perturb-and-observe maximum power point tracker.

The tracker nudges the converter duty cycle one step at a time: if the
measured panel power rose (or held) since the last update it keeps walking
in the same direction, otherwise it reverses. With the battery clamping the
converter output, raising duty lowers the panel voltage (v_panel = v_bus / duty),
so hill-climbing in duty space sweeps the unimodal P-V curve. At steady
state the command dithers in a small limit cycle around the peak.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class MpptSettings:
    """Tuning of the tracker: perturbation size, duty window, update decimation."""

    step: float = 0.01
    duty_min: float = 0.1
    duty_max: float = 0.99
    update_every: int = 1

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise DomainError("perturbation step must be positive")
        if not 0 < self.duty_min < self.duty_max <= 1:
            raise DomainError("duty window must satisfy 0 < duty_min < duty_max <= 1")
        if self.update_every < 1:
            raise DomainError("update_every must be >= 1")


@dataclass(frozen=True)
class MpptState:
    """Tracker memory: last observed power, last command, walk direction."""

    last_power: float
    last_duty: float
    direction: int
    step: float = 0.01
    duty_min: float = 0.1
    duty_max: float = 0.99

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise DomainError("perturbation step must be positive")
        if not 0 < self.duty_min < self.duty_max <= 1:
            raise DomainError("duty window must satisfy 0 < duty_min < duty_max <= 1")
        if not self.duty_min <= self.last_duty <= self.duty_max:
            raise DomainError("last_duty must lie inside the duty window")
        if self.direction not in (1, -1):
            raise DomainError("direction must be +1 or -1")


def initial_state(v_bat: float, voc_estimate: float, settings: MpptSettings = MpptSettings()) -> MpptState:
    """Starting point for the tracker.

    Aims the panel at 0.76 * Voc (a stock MPP-voltage heuristic) when that
    duty is feasible for the bus voltage, otherwise the middle of the duty
    window. Nothing downstream may depend on this; it only shortens settling.
    """
    target_v = 0.76 * voc_estimate
    if 0 < v_bat <= target_v:
        duty = v_bat / target_v
    else:
        duty = 0.5 * (settings.duty_min + settings.duty_max)
    duty = min(max(duty, settings.duty_min), settings.duty_max)
    return MpptState(
        last_power=0.0,
        last_duty=duty,
        direction=1,
        step=settings.step,
        duty_min=settings.duty_min,
        duty_max=settings.duty_max,
    )


def po_step(state: MpptState, v_pv: float, i_pv: float) -> tuple[MpptState, float]:
    """One perturb-and-observe update from a panel measurement.

    Compares p = v_pv * i_pv against the previous power: higher or equal
    keeps the walk direction (ties keep it to avoid thrash on flat
    segments), lower reverses it. The new duty command is clamped to the
    window. Only comparisons are used, so scaling all powers by a positive
    constant leaves the command sequence unchanged.
    """
    if v_pv < 0 or i_pv < 0:
        raise DomainError("panel measurements must be non-negative")
    p = v_pv * i_pv
    direction = state.direction if p >= state.last_power else -state.direction
    duty = min(max(state.last_duty + direction * state.step, state.duty_min), state.duty_max)
    return replace(state, last_power=p, last_duty=duty, direction=direction), duty


def pv_voltage_from_duty(v_bat: float, duty: float, voc_limit: float) -> float:
    """Panel voltage implied by the duty command with the battery clamping the bus.

    The buck relation v_out = duty * v_in, with v_out pinned at v_bat, puts
    the panel at v_bat / duty; the result is clamped to [0, voc_limit] since
    the panel cannot sit above its open-circuit voltage.
    """
    if duty <= 0:
        raise DomainError("duty must be positive")
    if v_bat <= 0:
        raise DomainError("bus voltage must be positive")
    return min(max(v_bat / duty, 0.0), voc_limit)
