"""Soil water balance, capacitive humidity sensor, and ADC quantization.

The sensor voltage falls as the soil gets wetter (capacitive probe
behavior); the controller only ever sees the quantized ADC code, which it
maps back to a humidity percentage. The default calibration is a linear
stand-in: real probes should replace it with their own table via the
scenario configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class SoilState:
    """Bucket model of the root zone.

    theta is the volumetric moisture fraction; volume is the water the zone
    holds at theta = 1 (liters). Above field capacity the excess drains at
    drain_coeff per second.
    """

    theta: float = 0.6
    volume: float = 100.0
    theta_fc: float = 0.7
    drain_coeff: float = 0.0

    def __post_init__(self) -> None:
        if not 0 <= self.theta <= 1:
            raise DomainError("theta must be in [0, 1]")
        if self.volume <= 0:
            raise DomainError("volume must be positive")
        if not 0 < self.theta_fc <= 1:
            raise DomainError("theta_fc must be in (0, 1]")
        if self.drain_coeff < 0:
            raise DomainError("drain_coeff must be non-negative")


@dataclass(frozen=True)
class SensorCalibration:
    """Humidity probe endpoints and ADC geometry."""

    v_supply: float = 5.0
    v_dry: float = 4.0
    v_wet: float = 1.0
    adc_bits: int = 10
    adc_vref: float = 5.0

    def __post_init__(self) -> None:
        if not 0 <= self.v_wet < self.v_dry <= self.v_supply:
            raise DomainError("calibration must satisfy 0 <= v_wet < v_dry <= v_supply")
        if self.adc_bits < 1:
            raise DomainError("adc_bits must be >= 1")
        if self.adc_vref <= 0:
            raise DomainError("adc_vref must be positive")

    @property
    def full_scale(self) -> int:
        return (1 << self.adc_bits) - 1


def soil_step(state: SoilState, pump_inflow: float, et_rate: float, dt: float) -> SoilState:
    """Advance the water balance by dt.

    Fluxes in liters/s: pump inflow adds, evapotranspiration removes, and
    moisture above field capacity drains proportionally. theta clamps to [0, 1].
    """
    if dt <= 0:
        raise DomainError("dt must be positive")
    if pump_inflow < 0 or et_rate < 0:
        raise DomainError("fluxes must be non-negative")
    drainage = state.drain_coeff * max(0.0, state.theta - state.theta_fc) * state.volume
    theta = state.theta + (pump_inflow - et_rate - drainage) * dt / state.volume
    return replace(state, theta=min(max(theta, 0.0), 1.0))


def sensor_voltage(theta: float, cal: SensorCalibration) -> float:
    """Probe output for a moisture fraction; linear between the dry and wet endpoints."""
    if not 0 <= theta <= 1:
        raise DomainError("theta must be in [0, 1]")
    return cal.v_dry + (cal.v_wet - cal.v_dry) * theta


def adc_read(v: float, cal: SensorCalibration) -> int:
    """Quantize a voltage to the ADC code; over-range clamps to full scale."""
    if v < 0:
        raise DomainError("adc input must be non-negative")
    return min(cal.full_scale, math.floor(v / cal.adc_vref * (1 << cal.adc_bits)))


def humidity_from_adc(code: int, cal: SensorCalibration) -> float:
    """Humidity percentage the controller reconstructs from an ADC code."""
    if not 0 <= code <= cal.full_scale:
        raise DomainError(f"adc code must be in [0, {cal.full_scale}]")
    v_hat = code / (1 << cal.adc_bits) * cal.adc_vref
    pct = 100.0 * (v_hat - cal.v_dry) / (cal.v_wet - cal.v_dry)
    return min(max(pct, 0.0), 100.0)
