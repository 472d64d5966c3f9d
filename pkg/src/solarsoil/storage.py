"""Coulomb-counting battery on a fixed-voltage bus."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class BatteryState:
    """State of charge plus the ratings needed by the charge path.

    The bus voltage is held at v_nominal regardless of soc; voltage-vs-soc
    curves are out of scope for the averaged power model.
    """

    soc: float = 0.5
    capacity: float = 7.2 * 3600.0  # A*s
    v_nominal: float = 12.0
    soc_low_cutoff: float = 0.2
    max_charge_current: float = 5.0

    def __post_init__(self) -> None:
        if not 0 <= self.soc <= 1:
            raise DomainError("soc must be in [0, 1]")
        if self.capacity <= 0:
            raise DomainError("capacity must be positive")
        if not 0 <= self.soc_low_cutoff < 1:
            raise DomainError("soc_low_cutoff must be in [0, 1)")
        if self.v_nominal <= 0:
            raise DomainError("v_nominal must be positive")
        if self.max_charge_current < 0:
            raise DomainError("max_charge_current must be non-negative")


def battery_step(state: BatteryState, i_net: float, dt: float) -> BatteryState:
    """Integrate net current (charge-positive) over dt; soc clamps to [0, 1]."""
    if dt <= 0:
        raise DomainError("dt must be positive")
    soc = min(max(state.soc + i_net * dt / state.capacity, 0.0), 1.0)
    return replace(state, soc=soc)


def charge_current_limit(state: BatteryState, offered: float) -> float:
    """Accepted charge current: capped at the rating, zero once full."""
    if offered < 0:
        raise DomainError("offered current must be non-negative")
    if state.soc >= 1.0:
        return 0.0
    return min(offered, state.max_charge_current)
