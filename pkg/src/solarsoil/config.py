"""Scenario configuration: strict `key = value` sections with documented defaults.

The format is line-oriented: `[section]` headers, `key = value` pairs,
`#` comments, UTF-8. Parsing is strict on purpose; a misspelled key is an
error, never a silently applied default. Error classes map to distinct
process exit codes: syntax 2, unknown key 3, invariant violation 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .control import ControllerState, PumpSpec
from .converter import ConverterDesign
from .errors import DomainError
from .mppt import MpptSettings
from .pv import PanelSpec
from .sim import IrradianceProfile, Scenario
from .soil import SensorCalibration, SoilState
from .storage import BatteryState


class ConfigError(Exception):
    exit_code = 1


class ConfigSyntaxError(ConfigError):
    exit_code = 2


class UnknownKeyError(ConfigError):
    exit_code = 3


class ConfigInvariantError(ConfigError):
    exit_code = 4


def _to_float(s: str) -> float:
    x = float(s)
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("must be a finite number")
    return x


def _to_int(s: str) -> int:
    return int(s, 10)


_BOOL_WORDS = {"true": True, "yes": True, "on": True, "1": True,
               "false": False, "no": False, "off": False, "0": False}


def _to_bool(s: str) -> bool:
    try:
        return _BOOL_WORDS[s.lower()]
    except KeyError:
        raise ValueError(f"{s!r} is not a boolean") from None


def _to_str(s: str) -> str:
    return s


def _to_levels(s: str) -> tuple[tuple[float, float], ...]:
    """Parse `start:value, start:value, ...` into (seconds, W/m^2) pairs."""
    out = []
    for item in s.split(","):
        start, sep, value = item.partition(":")
        if not sep:
            raise ValueError(f"{item.strip()!r} is not a start:value pair")
        out.append((_to_float(start.strip()), _to_float(value.strip())))
    if not out:
        raise ValueError("needs at least one start:value pair")
    return tuple(out)


def _to_floats(s: str) -> tuple[float, ...]:
    values = tuple(_to_float(item.strip()) for item in s.split(","))
    if not values:
        raise ValueError("needs at least one number")
    return values


# section -> key -> converter; this is also the authority on what keys exist
SCHEMA = {
    "panel": {
        "isc_ref": _to_float, "voc_ref": _to_float, "a_ref": _to_float,
        "g_ref": _to_float, "temp_coeff_i": _to_float, "temp_coeff_v": _to_float,
        "t_ref": _to_float,
    },
    "converter": {
        "duty": _to_float, "freq": _to_float, "load_r": _to_float,
        "inductance": _to_float, "capacitance": _to_float, "efficiency": _to_float,
        "vin_target": _to_float, "vout_target": _to_float,
    },
    "mppt": {
        "step": _to_float, "duty_min": _to_float, "duty_max": _to_float,
        "update_every": _to_int,
    },
    "battery": {
        "soc": _to_float, "capacity_ah": _to_float, "v_nominal": _to_float,
        "soc_low_cutoff": _to_float, "max_charge_current": _to_float,
    },
    "soil": {
        "theta": _to_float, "volume": _to_float, "theta_fc": _to_float,
        "drain_coeff": _to_float,
    },
    "sensor": {
        "v_supply": _to_float, "v_dry": _to_float, "v_wet": _to_float,
        "adc_bits": _to_int, "adc_vref": _to_float, "noise_v": _to_float,
    },
    "controller": {
        "setpoint": _to_float, "hysteresis": _to_float, "pump_on": _to_bool,
    },
    "pump": {
        "flow_rate": _to_float, "electrical_power": _to_float,
        "reservoir_liters": _to_float,
    },
    "profile": {
        "kind": _to_str, "value": _to_float, "levels": _to_levels,
        "levels_end": _to_float, "peak": _to_float, "day_length": _to_float,
        "curve_levels": _to_floats, "curve_points": _to_int,
    },
    "sim": {
        "dt": _to_float, "duration": _to_float, "et_rate": _to_float,
        "seed": _to_int, "ambient_t_k": _to_float,
    },
}


@dataclass(frozen=True)
class DesignTargets:
    """Optional vin/vout pair the design command derives the duty from."""

    vin: float | None = None
    vout: float | None = None


@dataclass(frozen=True)
class CurveRequest:
    """Irradiance levels and point count for the P-V curve export."""

    levels: tuple[float, ...] = (400.0, 700.0, 1000.0)
    points: int = 200


@dataclass(frozen=True)
class AppConfig:
    scenario: Scenario
    targets: DesignTargets
    curve: CurveRequest


def _parse_lines(text: str) -> dict[tuple[str, str], object]:
    """Raw pass: sections, keys, typed values. Raises on anything unknown."""
    values: dict[tuple[str, str], object] = {}
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigSyntaxError(f"line {lineno}: unterminated section header {line!r}")
            name = line[1:-1].strip()
            if name not in SCHEMA:
                raise UnknownKeyError(f"line {lineno}: unknown section [{name}]")
            section = name
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigSyntaxError(f"line {lineno}: expected 'key = value', got {line!r}")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ConfigSyntaxError(f"line {lineno}: expected 'key = value', got {line!r}")
        if section is None:
            raise ConfigSyntaxError(f"line {lineno}: key {key!r} appears before any [section]")
        if key not in SCHEMA[section]:
            raise UnknownKeyError(f"line {lineno}: unknown key {section}.{key}")
        try:
            values[(section, key)] = SCHEMA[section][key](value)
        except ValueError as e:
            raise ConfigSyntaxError(f"line {lineno}: {section}.{key}: {e}") from None
    return values


def _apply_overrides(values: dict[tuple[str, str], object], overrides: list[str]) -> None:
    for token in overrides:
        assignment, sep, value = token.partition("=")
        dotted = assignment.strip()
        value = value.strip()
        if not sep or not value or "." not in dotted:
            raise ConfigSyntaxError(f"override {token!r}: expected section.key=value")
        section, _, key = dotted.partition(".")
        if section not in SCHEMA:
            raise UnknownKeyError(f"override {token!r}: unknown section [{section}]")
        if key not in SCHEMA[section]:
            raise UnknownKeyError(f"override {token!r}: unknown key {section}.{key}")
        try:
            values[(section, key)] = SCHEMA[section][key](value)
        except ValueError as e:
            raise ConfigSyntaxError(f"override {token!r}: {e}") from None


def _kwargs(values: dict, section: str, *keys: str, rename: dict[str, str] | None = None) -> dict:
    """Collect the keys present for a section; dataclass defaults fill the rest."""
    rename = rename or {}
    out = {}
    for key in keys:
        if (section, key) in values:
            out[rename.get(key, key)] = values[(section, key)]
    return out


def _invariant(section: str, exc: DomainError) -> ConfigInvariantError:
    return ConfigInvariantError(f"{section}: {exc}")


def build_config(values: dict[tuple[str, str], object]) -> AppConfig:
    """Assemble the scenario and command extras, checking every invariant."""
    duty = values.get(("converter", "duty"), ConverterDesign.duty)
    if not 0 < duty <= 1:
        raise ConfigInvariantError("converter: duty must be in (0, 1]")
    capacity_ah = values.get(("battery", "capacity_ah"))
    if capacity_ah is not None and capacity_ah <= 0:
        raise ConfigInvariantError("battery: capacity_ah must be positive")

    try:
        panel = PanelSpec(**_kwargs(values, "panel", *SCHEMA["panel"]))
    except DomainError as e:
        raise _invariant("panel", e) from None
    try:
        design = ConverterDesign(
            **_kwargs(values, "converter", "duty", "freq", "load_r",
                      "inductance", "capacitance", "efficiency")
        )
    except DomainError as e:
        raise _invariant("converter", e) from None
    try:
        mppt = MpptSettings(**_kwargs(values, "mppt", *SCHEMA["mppt"]))
    except DomainError as e:
        raise _invariant("mppt", e) from None
    try:
        battery_kwargs = _kwargs(values, "battery", "soc", "v_nominal",
                                 "soc_low_cutoff", "max_charge_current")
        if capacity_ah is not None:
            battery_kwargs["capacity"] = capacity_ah * 3600.0
        battery = BatteryState(**battery_kwargs)
    except DomainError as e:
        raise _invariant("battery", e) from None
    try:
        soil = SoilState(**_kwargs(values, "soil", *SCHEMA["soil"]))
    except DomainError as e:
        raise _invariant("soil", e) from None
    try:
        sensor = SensorCalibration(
            **_kwargs(values, "sensor", "v_supply", "v_dry", "v_wet", "adc_bits", "adc_vref")
        )
    except DomainError as e:
        raise _invariant("sensor", e) from None
    try:
        controller = ControllerState(**_kwargs(values, "controller", *SCHEMA["controller"]))
    except DomainError as e:
        raise _invariant("controller", e) from None
    try:
        pump = PumpSpec(**_kwargs(values, "pump", "flow_rate", "electrical_power"))
    except DomainError as e:
        raise _invariant("pump", e) from None
    try:
        profile = IrradianceProfile(
            **_kwargs(values, "profile", "kind", "value", "levels",
                      "levels_end", "peak", "day_length")
        )
    except DomainError as e:
        raise _invariant("profile", e) from None
    try:
        scenario = Scenario(
            panel=panel, design=design, mppt=mppt, battery=battery, soil=soil,
            sensor=sensor, controller=controller, pump=pump, profile=profile,
            **_kwargs(values, "sim", *SCHEMA["sim"]),
            **_kwargs(values, "sensor", "noise_v", rename={"noise_v": "sensor_noise_v"}),
            **_kwargs(values, "pump", "reservoir_liters"),
        )
    except DomainError as e:
        raise _invariant("sim", e) from None

    vin = values.get(("converter", "vin_target"))
    vout = values.get(("converter", "vout_target"))
    if (vin is None) != (vout is None):
        raise ConfigInvariantError(
            "converter: vin_target and vout_target must be given together"
        )
    if vin is not None and vin <= 0:
        raise ConfigInvariantError("converter: vin_target must be positive")
    if vout is not None and vout <= 0:
        raise ConfigInvariantError("converter: vout_target must be positive")

    curve_levels = values.get(("profile", "curve_levels"), CurveRequest.levels)
    if any(g < 0 for g in curve_levels):
        raise ConfigInvariantError("profile: curve_levels must be non-negative")
    curve_points = values.get(("profile", "curve_points"), CurveRequest.points)
    if curve_points < 2:
        raise ConfigInvariantError("profile: curve_points must be >= 2")

    return AppConfig(
        scenario=scenario,
        targets=DesignTargets(vin=vin, vout=vout),
        curve=CurveRequest(levels=tuple(curve_levels), points=curve_points),
    )


def load_config(text: str, overrides: list[str] | None = None) -> AppConfig:
    """Parse config text plus `section.key=value` overrides into an AppConfig."""
    values = _parse_lines(text)
    _apply_overrides(values, list(overrides or []))
    return build_config(values)


def parse_config(text: str) -> Scenario:
    """Parse config text into a fully populated, validated Scenario."""
    return load_config(text).scenario
