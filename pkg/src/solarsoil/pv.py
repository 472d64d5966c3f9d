"""Photovoltaic array model: I-V / P-V characteristics and a brute-force MPP oracle.

The panel is modeled with a simplified single-diode law, explicit in current:

    I(V) = Iph(G, T) - I0 * (exp(V / a(T)) - 1)

with series resistance zero and shunt resistance infinite, so no implicit
solve is needed. The saturation current I0 is calibrated from the datasheet
corners (Isc, Voc) so the model reproduces both exactly at reference
conditions. The resulting P-V curve is unimodal with a single maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# exp argument above this would overflow a double; current is 0 long before
_EXP_ARG_MAX = 700.0


@dataclass(frozen=True)
class PanelSpec:
    """Electrical parameters of the PV array.

    Attributes:
        isc_ref: short-circuit current at reference irradiance (A).
        voc_ref: open-circuit voltage at reference irradiance (V).
        g_ref: reference irradiance (W/m^2).
        a_ref: diode thermal voltage scale n*Ns*Vt folded into one
            calibration constant (V).
        temp_coeff_i: fractional short-circuit current change per kelvin.
        temp_coeff_v: open-circuit voltage change per kelvin (V/K).
        t_ref: reference cell temperature (K).
    """

    isc_ref: float = 5.0
    voc_ref: float = 20.0
    g_ref: float = 1000.0
    a_ref: float = 1.5
    temp_coeff_i: float = 0.0
    temp_coeff_v: float = 0.0
    t_ref: float = 298.15

    def __post_init__(self) -> None:
        if self.isc_ref <= 0:
            raise DomainError("isc_ref must be positive")
        if self.voc_ref <= 0:
            raise DomainError("voc_ref must be positive")
        if self.a_ref <= 0:
            raise DomainError("a_ref must be positive")
        if self.g_ref <= 0:
            raise DomainError("g_ref must be positive")

    @property
    def saturation_current(self) -> float:
        """Dark saturation current I0 calibrated so that I(voc_ref) = 0 at reference."""
        return self.isc_ref / math.expm1(self.voc_ref / self.a_ref)

    def thermal_scale(self, t: float) -> float:
        """Diode scale a(T), stretched so the zero-current voltage tracks temp_coeff_v."""
        a = self.a_ref * (self.voc_ref + self.temp_coeff_v * (t - self.t_ref)) / self.voc_ref
        if a <= 0:
            raise DomainError(f"temperature {t} K puts the diode scale outside the model")
        return a


@dataclass(frozen=True)
class OperatingPoint:
    """One (voltage, current, power) sample of the panel characteristic."""

    voltage: float
    current: float
    power: float


def photocurrent(spec: PanelSpec, g: float, t: float) -> float:
    """Light-generated current: linear in irradiance, linear temperature correction.

    Returns isc_ref * (g / g_ref) * (1 + temp_coeff_i * (t - t_ref)), floored at 0.
    """
    if g < 0:
        raise DomainError("irradiance must be non-negative")
    return max(0.0, spec.isc_ref * (g / spec.g_ref) * (1.0 + spec.temp_coeff_i * (t - spec.t_ref)))


def open_circuit_voltage(spec: PanelSpec, g: float, t: float) -> float:
    """Voltage where the modeled current reaches zero at the given conditions."""
    iph = photocurrent(spec, g, t)
    if iph == 0.0:
        return 0.0
    return spec.thermal_scale(t) * math.log1p(iph / spec.saturation_current)


def panel_current(spec: PanelSpec, v: float, g: float, t: float) -> float:
    """Terminal current at voltage v, irradiance g, cell temperature t.

    Single-diode law explicit in current; clamped at zero (the modeled
    quadrant is the generating one).
    """
    if v < 0:
        raise DomainError("voltage must be non-negative")
    iph = photocurrent(spec, g, t)
    x = v / spec.thermal_scale(t)
    if x > _EXP_ARG_MAX:
        return 0.0
    return max(0.0, iph - spec.saturation_current * math.expm1(x))


def _current_sweep(spec: PanelSpec, v: np.ndarray, g: float, t: float) -> np.ndarray:
    iph = photocurrent(spec, g, t)
    return np.maximum(0.0, iph - spec.saturation_current * np.expm1(v / spec.thermal_scale(t)))


def pv_curve(spec: PanelSpec, g: float, t: float, n: int) -> list[OperatingPoint]:
    """Sample the P-V characteristic with n voltages uniform on [0, Voc(g, t)].

    The first point is always (0, Isc, 0); the last sits at open circuit.
    """
    if n < 2:
        raise DomainError("a curve needs at least 2 points")
    v = np.linspace(0.0, open_circuit_voltage(spec, g, t), n)
    i = _current_sweep(spec, v, g, t)
    p = v * i
    return [OperatingPoint(float(vk), float(ik), float(pk)) for vk, ik, pk in zip(v, i, p)]


def mpp_oracle(spec: PanelSpec, g: float, t: float, resolution: int = 100_000) -> OperatingPoint:
    """Maximum power point by exhaustive sweep; ground truth for tracker tests.

    Sweeps `resolution` voltages uniform on [0, Voc(g, t)] and returns the
    argmax-power sample. Resolution must be at least 1000 so the sweep step
    stays well inside the curvature of the power peak.
    """
    if resolution < 1000:
        raise DomainError("oracle resolution must be >= 1000")
    v = np.linspace(0.0, open_circuit_voltage(spec, g, t), resolution)
    i = _current_sweep(spec, v, g, t)
    p = v * i
    k = int(np.argmax(p))
    return OperatingPoint(float(v[k]), float(i[k]), float(p[k]))
