"""Tests for the hysteresis pump relay and the actuator."""

from __future__ import annotations

import pytest

from solarsoil.control import ControllerState, PumpSpec, controller_step, pump_step
from solarsoil.errors import DomainError

SOC_OK = 0.8
CUTOFF = 0.2


def _state(pump_on=False):
    return ControllerState(setpoint=50.0, hysteresis=5.0, pump_on=pump_on)


class TestControllerStep:
    def test_turns_on_below_setpoint(self):
        after = controller_step(_state(pump_on=False), 49.0, SOC_OK, CUTOFF)
        assert after.pump_on

    def test_turns_on_at_setpoint(self):
        # "drops to the set value" is inclusive
        after = controller_step(_state(pump_on=False), 50.0, SOC_OK, CUTOFF)
        assert after.pump_on

    def test_holds_inside_band_when_on(self):
        after = controller_step(_state(pump_on=True), 52.0, SOC_OK, CUTOFF)
        assert after.pump_on

    def test_holds_inside_band_when_off(self):
        after = controller_step(_state(pump_on=False), 52.0, SOC_OK, CUTOFF)
        assert not after.pump_on

    def test_turns_off_above_band(self):
        after = controller_step(_state(pump_on=True), 56.0, SOC_OK, CUTOFF)
        assert not after.pump_on

    def test_turns_off_at_band_edge(self):
        after = controller_step(_state(pump_on=True), 55.0, SOC_OK, CUTOFF)
        assert not after.pump_on

    def test_lockout_forces_off(self):
        after = controller_step(_state(pump_on=True), 10.0, 0.1, CUTOFF)
        assert not after.pump_on
        assert after.lockout

    def test_lockout_clears_with_charge(self):
        locked = controller_step(_state(pump_on=True), 10.0, 0.1, CUTOFF)
        recovered = controller_step(locked, 10.0, 0.5, CUTOFF)
        assert recovered.pump_on
        assert not recovered.lockout

    def test_idempotent_inside_band(self):
        state = controller_step(_state(pump_on=True), 52.0, SOC_OK, CUTOFF)
        for _ in range(10):
            again = controller_step(state, 52.0, SOC_OK, CUTOFF)
            assert again == state
            state = again

    def test_input_validation(self):
        with pytest.raises(DomainError):
            controller_step(_state(), 101.0, SOC_OK, CUTOFF)
        with pytest.raises(DomainError):
            controller_step(_state(), 50.0, 1.5, CUTOFF)

    def test_no_chatter_on_synthetic_trace(self):
        # humidity sweeps down, up past the band, down again: exactly two ONs
        state = _state(pump_on=False)
        trace = [60, 55, 51, 50, 49, 51, 54, 55.5, 54, 51, 50, 49]
        ons = 0
        prev_on = state.pump_on
        for h in trace:
            state = controller_step(state, float(h), SOC_OK, CUTOFF)
            if state.pump_on and not prev_on:
                ons += 1
            prev_on = state.pump_on
        assert ons == 2


class TestControllerValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"setpoint": -1.0},
            {"setpoint": 101.0},
            {"hysteresis": 0.0},
            {"setpoint": 98.0, "hysteresis": 5.0},  # band would leave [0, 100]
        ],
    )
    def test_invalid_fields(self, kwargs):
        with pytest.raises(DomainError):
            ControllerState(**kwargs)


class TestPumpStep:
    def test_on(self):
        assert pump_step(True, PumpSpec(flow_rate=0.02, electrical_power=24.0)) == (0.02, 24.0)

    def test_off(self):
        assert pump_step(False, PumpSpec()) == (0.0, 0.0)

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            PumpSpec(flow_rate=0.0)
        with pytest.raises(DomainError):
            PumpSpec(electrical_power=-1.0)
