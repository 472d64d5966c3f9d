"""Tests for buck converter sizing rules and the averaged power path."""

from __future__ import annotations

import random

import pytest

from solarsoil.converter import (
    ConverterDesign,
    critical_inductance,
    duty_for_output,
    min_capacitance,
    output_voltage,
    power_path_step,
    validate_design,
)
from solarsoil.errors import DomainError, InfeasibleBuckError


class TestOutputVoltage:
    def test_half_duty(self):
        assert output_voltage(12.0, 0.5) == 6.0

    def test_always_on(self):
        assert output_voltage(12.0, 1.0) == 12.0

    def test_always_off(self):
        assert output_voltage(12.0, 0.0) == 0.0

    @pytest.mark.parametrize("duty", [-0.1, 1.1])
    def test_duty_out_of_range(self, duty):
        with pytest.raises(DomainError):
            output_voltage(12.0, duty)


class TestDutyForOutput:
    def test_half(self):
        assert duty_for_output(12.0, 6.0) == 0.5

    def test_identity(self):
        assert duty_for_output(12.0, 12.0) == 1.0

    def test_boost_is_infeasible(self):
        with pytest.raises(InfeasibleBuckError):
            duty_for_output(12.0, 13.0)

    def test_nonpositive_input_rejected(self):
        with pytest.raises(DomainError):
            duty_for_output(0.0, 1.0)
        with pytest.raises(DomainError):
            duty_for_output(12.0, 0.0)

    def test_round_trip_random_pairs(self):
        rng = random.Random(42)
        for _ in range(1000):
            vin = rng.uniform(0.5, 400.0)
            vout = vin * rng.uniform(1e-6, 1.0)
            duty = duty_for_output(vin, vout)
            assert output_voltage(vin, duty) == pytest.approx(vout, rel=1e-12)


class TestSizingRules:
    def test_critical_inductance_reference(self):
        assert critical_inductance(0.5, 10.0, 25e3) == pytest.approx(1.0e-4, rel=1e-12)

    def test_critical_inductance_full_duty(self):
        assert critical_inductance(1.0, 10.0, 25e3) == 0.0

    def test_critical_inductance_zero_duty(self):
        assert critical_inductance(0.0, 10.0, 25e3) == pytest.approx(2.0e-4, rel=1e-12)

    def test_min_capacitance_reference(self):
        assert min_capacitance(0.5, 1.0e-4, 25e3) == pytest.approx(5.0e-7, rel=1e-12)

    def test_min_capacitance_full_duty(self):
        assert min_capacitance(1.0, 1.0e-4, 25e3) == 0.0

    def test_min_capacitance_frequency_scaling(self):
        # doubling f quarters the bound at fixed duty and L
        base = min_capacitance(0.5, 1e-4, 25e3)
        assert min_capacitance(0.5, 1e-4, 50e3) == pytest.approx(base / 4.0, rel=1e-12)

    def test_inductance_linear_in_load(self):
        base = critical_inductance(0.3, 10.0, 25e3)
        assert critical_inductance(0.3, 20.0, 25e3) == pytest.approx(2 * base, rel=1e-12)

    def test_capacitance_inverse_in_inductance(self):
        base = min_capacitance(0.3, 1e-4, 25e3)
        assert min_capacitance(0.3, 2e-4, 25e3) == pytest.approx(base / 2, rel=1e-12)

    @pytest.mark.parametrize("bad", [0.0, -1.0])
    def test_bad_parameters(self, bad):
        with pytest.raises(DomainError):
            critical_inductance(0.5, bad, 25e3)
        with pytest.raises(DomainError):
            critical_inductance(0.5, 10.0, bad)
        with pytest.raises(DomainError):
            min_capacitance(0.5, bad, 25e3)
        with pytest.raises(DomainError):
            min_capacitance(0.5, 1e-4, bad)


class TestValidateDesign:
    def _design(self, **kwargs):
        base = dict(duty=0.5, freq=25e3, load_r=10.0, inductance=2e-4, capacitance=1e-6)
        base.update(kwargs)
        return ConverterDesign(**base)

    def test_all_pass(self):
        report = validate_design(self._design())
        assert report.all_pass
        by_name = {c.name: c for c in report.checks}
        assert by_name["inductance_ccm"].bound == pytest.approx(1.0e-4, rel=1e-12)
        assert by_name["capacitance_ripple"].bound == pytest.approx(5.0e-7, rel=1e-12)

    def test_capacitance_boundary_fails_strict(self):
        # exactly the minimum is not "greater than" it
        report = validate_design(self._design(capacitance=5.0e-7))
        by_name = {c.name: c for c in report.checks}
        assert not by_name["capacitance_ripple"].passed
        assert not report.all_pass

    def test_inductance_boundary_is_admissible(self):
        report = validate_design(self._design(inductance=1.0e-4))
        by_name = {c.name: c for c in report.checks}
        assert by_name["inductance_ccm"].passed

    def test_low_inductance_fails(self):
        report = validate_design(self._design(inductance=5e-5))
        by_name = {c.name: c for c in report.checks}
        assert not by_name["inductance_ccm"].passed

    def test_inconsistent_timing_flagged(self):
        design = self._design(on_time=0.6 / 25e3, period=1.0 / 25e3)
        report = validate_design(design)
        by_name = {c.name: c for c in report.checks}
        assert not by_name["timing_consistency"].passed

    def test_derived_timing_consistent(self):
        design = self._design(duty=0.37, freq=31e3)
        assert design.on_time == design.duty * design.period
        assert design.period == 1.0 / design.freq
        by_name = {c.name: c for c in validate_design(design).checks}
        assert by_name["timing_consistency"].passed

    def test_duty_out_of_range_reported_not_raised(self):
        report = validate_design(self._design(duty=1.5))
        by_name = {c.name: c for c in report.checks}
        assert not by_name["duty_range"].passed

    def test_pure(self):
        design = self._design()
        assert validate_design(design) == validate_design(design)


class TestPowerPath:
    def test_lossless_balance(self):
        design = ConverterDesign(duty=0.5, efficiency=1.0)
        vout, iout = power_path_step(12.0, 2.0, design)
        assert (vout, iout) == (6.0, 4.0)

    def test_efficiency_scaling(self):
        design = ConverterDesign(duty=0.5, efficiency=0.9)
        vout, iout = power_path_step(12.0, 2.0, design)
        assert vout == 6.0
        assert iout == pytest.approx(3.6, rel=1e-12)

    def test_zero_input(self):
        design = ConverterDesign(duty=0.5)
        assert power_path_step(12.0, 0.0, design) == (6.0, 0.0)

    def test_power_conserved_times_efficiency(self):
        rng = random.Random(7)
        for _ in range(200):
            design = ConverterDesign(duty=rng.uniform(0.05, 1.0), efficiency=rng.uniform(0.1, 1.0))
            vin, iin = rng.uniform(0.0, 50.0), rng.uniform(0.0, 10.0)
            vout, iout = power_path_step(vin, iin, design)
            assert vout * iout == pytest.approx(design.efficiency * vin * iin, rel=1e-12)

    def test_negative_inputs_rejected(self):
        design = ConverterDesign()
        with pytest.raises(DomainError):
            power_path_step(-1.0, 1.0, design)
        with pytest.raises(DomainError):
            power_path_step(1.0, -1.0, design)


class TestConverterDesignType:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"freq": 0.0},
            {"load_r": -1.0},
            {"inductance": 0.0},
            {"capacitance": 0.0},
            {"efficiency": 0.0},
            {"efficiency": 1.1},
        ],
    )
    def test_invalid_fields(self, kwargs):
        with pytest.raises(DomainError):
            ConverterDesign(**kwargs)
