"""Solar-powered soil-humidity control: converter sizing, MPPT, and plant simulation."""

from .control import ControllerState, PumpSpec, controller_step, pump_step
from .converter import (
    ConverterDesign,
    DesignReport,
    critical_inductance,
    duty_for_output,
    min_capacitance,
    output_voltage,
    power_path_step,
    validate_design,
)
from .errors import DomainError, InfeasibleBuckError, SimulationError
from .mppt import MpptSettings, MpptState, initial_state, po_step, pv_voltage_from_duty
from .pv import OperatingPoint, PanelSpec, mpp_oracle, panel_current, photocurrent, pv_curve
from .sim import IrradianceProfile, Scenario, Simulation, TimeSeriesRecord, irradiance_at, run
from .soil import (
    SensorCalibration,
    SoilState,
    adc_read,
    humidity_from_adc,
    sensor_voltage,
    soil_step,
)
from .storage import BatteryState, battery_step, charge_current_limit
from .config import parse_config

__all__ = [
    "BatteryState",
    "ControllerState",
    "ConverterDesign",
    "DesignReport",
    "DomainError",
    "InfeasibleBuckError",
    "IrradianceProfile",
    "MpptSettings",
    "MpptState",
    "OperatingPoint",
    "PanelSpec",
    "PumpSpec",
    "Scenario",
    "SensorCalibration",
    "Simulation",
    "SimulationError",
    "SoilState",
    "TimeSeriesRecord",
    "adc_read",
    "battery_step",
    "charge_current_limit",
    "controller_step",
    "critical_inductance",
    "duty_for_output",
    "humidity_from_adc",
    "initial_state",
    "irradiance_at",
    "min_capacitance",
    "mpp_oracle",
    "output_voltage",
    "panel_current",
    "parse_config",
    "photocurrent",
    "po_step",
    "power_path_step",
    "pump_step",
    "pv_curve",
    "pv_voltage_from_duty",
    "run",
    "sensor_voltage",
    "soil_step",
    "validate_design",
]
