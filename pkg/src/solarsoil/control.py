"""Hysteresis pump controller with battery lockout, and the pump actuator."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class ControllerState:
    """Setpoint relay: ON at or below the setpoint, OFF above setpoint + band."""

    setpoint: float = 50.0
    hysteresis: float = 5.0
    pump_on: bool = False
    lockout: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.setpoint <= 100:
            raise DomainError("setpoint must be in [0, 100] percent")
        if self.hysteresis <= 0:
            raise DomainError("hysteresis must be positive")
        if self.setpoint + self.hysteresis > 100:
            raise DomainError("setpoint + hysteresis must not exceed 100 percent")


@dataclass(frozen=True)
class PumpSpec:
    flow_rate: float = 0.02  # liters/s while on
    electrical_power: float = 24.0  # W while on

    def __post_init__(self) -> None:
        if self.flow_rate <= 0:
            raise DomainError("flow_rate must be positive")
        if self.electrical_power <= 0:
            raise DomainError("electrical_power must be positive")


def controller_step(
    state: ControllerState, humidity: float, soc: float, soc_low_cutoff: float
) -> ControllerState:
    """Update the relay from a humidity reading and the battery charge.

    A battery below the cutoff forces the pump off regardless of humidity.
    Otherwise the pump turns on when humidity has dropped to the setpoint,
    turns off once it has risen past setpoint + hysteresis, and holds its
    previous state inside the band.
    """
    if not 0 <= humidity <= 100:
        raise DomainError("humidity must be in [0, 100] percent")
    if not 0 <= soc <= 1:
        raise DomainError("soc must be in [0, 1]")
    lockout = soc < soc_low_cutoff
    if lockout:
        pump_on = False
    elif humidity <= state.setpoint:
        pump_on = True
    elif humidity >= state.setpoint + state.hysteresis:
        pump_on = False
    else:
        pump_on = state.pump_on
    return replace(state, pump_on=pump_on, lockout=lockout)


def pump_step(on: bool, spec: PumpSpec) -> tuple[float, float]:
    """Actuator output: (flow liters/s, electrical load W)."""
    if on:
        return spec.flow_rate, spec.electrical_power
    return 0.0, 0.0
