"""Fixed-step engine wiring the panel, converter, tracker, battery, soil and pump.

Each step runs the same fixed sequence (the order is what makes runs
deterministic): sample irradiance, place the panel operating point implied
by the duty command, transfer power through the converter, limit the charge
current, read the soil through the sensor/ADC path, update the pump relay,
integrate the battery and the soil, and finally let the tracker pick the
duty for the next step.

A record holds the signals as the controllers saw them at time t: soc and
theta are the pre-integration values, duty is the command that produced
this step's panel voltage, and pump_on/flow are what the pump actually did
over [t, t + dt).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace

from .control import ControllerState, PumpSpec, controller_step, pump_step
from .converter import ConverterDesign, power_path_step
from .errors import DomainError, SimulationError
from .mppt import MpptSettings, initial_state, po_step, pv_voltage_from_duty
from .pv import PanelSpec, open_circuit_voltage, panel_current
from .soil import SensorCalibration, SoilState, adc_read, humidity_from_adc, sensor_voltage, soil_step
from .storage import BatteryState, battery_step, charge_current_limit

PROFILE_KINDS = ("constant", "three_level", "diurnal")


@dataclass(frozen=True)
class IrradianceProfile:
    """Irradiance as a function of time.

    kind selects the shape: a constant value, a step function through the
    (start_s, w_m2) levels, or a half-sine day. A three_level profile holds
    its last level until levels_end, then drops to 0; levels_end of None
    holds the last level indefinitely.
    """

    kind: str = "diurnal"
    value: float = 1000.0
    levels: tuple[tuple[float, float], ...] = ((0.0, 400.0), (100.0, 700.0), (200.0, 1000.0))
    levels_end: float | None = None
    peak: float = 1000.0
    day_length: float = 86400.0

    def __post_init__(self) -> None:
        if self.kind not in PROFILE_KINDS:
            raise DomainError(f"profile kind must be one of {PROFILE_KINDS}")
        if self.value < 0 or self.peak < 0:
            raise DomainError("irradiance values must be non-negative")
        if self.day_length <= 0:
            raise DomainError("day_length must be positive")
        starts = [s for s, _ in self.levels]
        if starts != sorted(starts) or len(set(starts)) != len(starts):
            raise DomainError("levels must be strictly time-ordered")
        if any(g < 0 for _, g in self.levels):
            raise DomainError("irradiance values must be non-negative")
        if self.levels_end is not None and self.levels and self.levels_end <= self.levels[-1][0]:
            raise DomainError("levels_end must lie after the last level start")


def irradiance_at(profile: IrradianceProfile, t: float) -> float:
    """Evaluate the profile at time t (seconds from the start of the run)."""
    if t < 0:
        raise DomainError("time must be non-negative")
    if profile.kind == "constant":
        return profile.value
    if profile.kind == "diurnal":
        return profile.peak * max(0.0, math.sin(math.pi * t / profile.day_length))
    g = 0.0
    for start, level in profile.levels:
        if t < start:
            break
        g = level
    if profile.levels_end is not None and t >= profile.levels_end:
        return 0.0
    return g


@dataclass(frozen=True)
class Scenario:
    """Everything a run needs; defaults give the demo system."""

    panel: PanelSpec = PanelSpec()
    design: ConverterDesign = ConverterDesign()
    mppt: MpptSettings = MpptSettings()
    battery: BatteryState = BatteryState()
    soil: SoilState = SoilState()
    sensor: SensorCalibration = SensorCalibration()
    controller: ControllerState = ControllerState()
    pump: PumpSpec = PumpSpec()
    profile: IrradianceProfile = IrradianceProfile()
    et_rate: float = 1e-3  # liters/s drawn from the soil
    dt: float = 1.0
    duration: float = 86400.0
    seed: int = 0
    ambient_t_k: float = 298.15
    sensor_noise_v: float = 0.0  # uniform +-amplitude on the probe voltage; 0 disables
    reservoir_liters: float | None = None  # None = unlimited rainwater

    def __post_init__(self) -> None:
        if self.dt <= 0:
            raise DomainError("dt must be positive")
        if self.duration < self.dt:
            raise DomainError("duration must cover at least one step")
        if self.et_rate < 0:
            raise DomainError("et_rate must be non-negative")
        if self.sensor_noise_v < 0:
            raise DomainError("sensor_noise_v must be non-negative")
        if self.reservoir_liters is not None and self.reservoir_liters < 0:
            raise DomainError("reservoir_liters must be non-negative")


@dataclass(frozen=True)
class TimeSeriesRecord:
    """One row of every observable signal."""

    t: float
    g: float
    v_pv: float
    i_pv: float
    p_pv: float
    duty: float
    v_out: float
    i_out: float
    p_out: float
    soc: float
    theta: float
    humidity_pct: float
    adc_code: int
    pump_on: bool
    flow: float


class Simulation:
    """Mutable engine for one scenario; step() advances one dt."""

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.battery = scenario.battery
        self.soil = scenario.soil
        self.controller = scenario.controller
        self.mppt = initial_state(
            v_bat=scenario.battery.v_nominal,
            voc_estimate=scenario.panel.voc_ref,
            settings=scenario.mppt,
        )
        self.duty = self.mppt.last_duty
        self.reservoir = scenario.reservoir_liters
        self.step_index = 0
        # seeded even though default runs draw nothing, so a noisy rerun of
        # the same scenario is reproducible
        self._rng = random.Random(scenario.seed)

    def step(self) -> TimeSeriesRecord:
        scn = self.scenario
        k = self.step_index
        t = k * scn.dt
        try:
            g = irradiance_at(scn.profile, t)

            duty = self.duty
            voc = open_circuit_voltage(scn.panel, g, scn.ambient_t_k)
            v_pv = pv_voltage_from_duty(self.battery.v_nominal, duty, voc)
            i_pv = panel_current(scn.panel, v_pv, g, scn.ambient_t_k)
            p_pv = v_pv * i_pv

            v_out, i_out = power_path_step(v_pv, i_pv, scn.design)
            p_out = v_out * i_out
            i_charge = charge_current_limit(self.battery, i_out)

            v_sense = sensor_voltage(self.soil.theta, scn.sensor)
            if scn.sensor_noise_v > 0:
                v_sense += self._rng.uniform(-scn.sensor_noise_v, scn.sensor_noise_v)
                v_sense = min(max(v_sense, 0.0), scn.sensor.v_supply)
            code = adc_read(v_sense, scn.sensor)
            humidity = humidity_from_adc(code, scn.sensor)

            self.controller = controller_step(
                self.controller, humidity, self.battery.soc, self.battery.soc_low_cutoff
            )
            pump_on = self.controller.pump_on
            if self.reservoir is not None and self.reservoir <= 0:
                pump_on = False  # dry reservoir overrides the relay
            flow, pump_power = pump_step(pump_on, scn.pump)
            if self.reservoir is not None:
                self.reservoir = max(0.0, self.reservoir - flow * scn.dt)

            soc_seen = self.battery.soc
            theta_seen = self.soil.theta

            i_net = i_charge - pump_power / self.battery.v_nominal
            self.battery = battery_step(self.battery, i_net, scn.dt)
            self.soil = soil_step(self.soil, flow, scn.et_rate, scn.dt)

            if k % scn.mppt.update_every == 0:
                self.mppt, self.duty = po_step(self.mppt, v_pv, i_pv)
        except DomainError as e:
            raise SimulationError(f"step {k}: {e}", step_index=k) from e

        self.step_index = k + 1
        return TimeSeriesRecord(
            t=t,
            g=g,
            v_pv=v_pv,
            i_pv=i_pv,
            p_pv=p_pv,
            duty=duty,
            v_out=v_out,
            i_out=i_out,
            p_out=p_out,
            soc=soc_seen,
            theta=theta_seen,
            humidity_pct=humidity,
            adc_code=code,
            pump_on=pump_on,
            flow=flow,
        )

    def run(self) -> list[TimeSeriesRecord]:
        return [self.step() for _ in range(num_steps(self.scenario))]


def num_steps(scenario: Scenario) -> int:
    # the 1e-9 slack keeps quotients like 100/0.1 from flooring one short
    return math.floor(scenario.duration / scenario.dt + 1e-9)


def run(scenario: Scenario) -> list[TimeSeriesRecord]:
    """Simulate the whole scenario; same scenario, same records, bit for bit."""
    return Simulation(scenario).run()
