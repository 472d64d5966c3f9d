"""Buck converter design rules and the averaged power-path model.

The steady-state relations used for sizing:

    v_out  = D * v_in
    L_crit = (1 - D) * R / (2 * f)     continuous-conduction boundary
    C_min  = (1 - D) / (16 * L * f^2)  output ripple bound

The chosen capacitor must be strictly greater than C_min; inductance at the
boundary value is marginal but admissible. Power transfer through the stage
is modeled cycle-averaged with a fixed efficiency, so switching ripple never
appears at the simulation timescale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InfeasibleBuckError

# slack for duty = t1/T and f = 1/T checks; exact by construction, this only
# absorbs rounding when the timing fields are supplied by hand
_CONSISTENCY_RTOL = 1e-12


@dataclass(frozen=True)
class ConverterDesign:
    """Component values and operating point of the buck stage.

    on_time and period default to the values implied by duty and freq;
    passing them explicitly lets validate_design flag an inconsistent set.
    Duty is deliberately not range-checked here so that out-of-range designs
    can be examined by validate_design instead of being unrepresentable.
    """

    duty: float = 0.5
    freq: float = 25e3
    load_r: float = 10.0
    inductance: float = 2e-4
    capacitance: float = 1e-6
    efficiency: float = 0.9
    on_time: float | None = None  # filled from duty and freq when omitted
    period: float | None = None

    def __post_init__(self) -> None:
        if self.freq <= 0:
            raise DomainError("switching frequency must be positive")
        if self.load_r <= 0:
            raise DomainError("load resistance must be positive")
        if self.inductance <= 0:
            raise DomainError("inductance must be positive")
        if self.capacitance <= 0:
            raise DomainError("capacitance must be positive")
        if not 0 < self.efficiency <= 1:
            raise DomainError("efficiency must be in (0, 1]")
        if self.period is None:
            object.__setattr__(self, "period", 1.0 / self.freq)
        if self.on_time is None:
            object.__setattr__(self, "on_time", self.duty * self.period)


@dataclass(frozen=True)
class ConstraintCheck:
    """One row of a design validation report."""

    name: str
    passed: bool
    value: float
    bound: float
    note: str


@dataclass(frozen=True)
class DesignReport:
    checks: tuple[ConstraintCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def output_voltage(vin: float, duty: float) -> float:
    """Average output voltage of the buck stage: duty * vin."""
    if not 0 <= duty <= 1:
        raise DomainError("duty must be in [0, 1]")
    if vin < 0:
        raise DomainError("input voltage must be non-negative")
    return duty * vin


def duty_for_output(vin: float, vout: float) -> float:
    """Duty cycle that produces vout from vin; raises if the target needs a boost."""
    if vin <= 0:
        raise DomainError("input voltage must be positive")
    if vout <= 0:
        raise DomainError("output voltage must be positive")
    if vout > vin:
        raise InfeasibleBuckError(
            f"target {vout} V exceeds input {vin} V; a buck stage cannot step up"
        )
    return vout / vin


def critical_inductance(duty: float, load_r: float, freq: float) -> float:
    """Minimum inductance keeping the stage in continuous conduction."""
    if not 0 <= duty <= 1:
        raise DomainError("duty must be in [0, 1]")
    if load_r <= 0:
        raise DomainError("load resistance must be positive")
    if freq <= 0:
        raise DomainError("switching frequency must be positive")
    return (1.0 - duty) * load_r / (2.0 * freq)


def min_capacitance(duty: float, inductance: float, freq: float) -> float:
    """Minimum output capacitance for the ripple bound; the design must exceed it."""
    if not 0 <= duty <= 1:
        raise DomainError("duty must be in [0, 1]")
    if inductance <= 0:
        raise DomainError("inductance must be positive")
    if freq <= 0:
        raise DomainError("switching frequency must be positive")
    return (1.0 - duty) / (16.0 * inductance * freq * freq)


def validate_design(design: ConverterDesign) -> DesignReport:
    """Check a design against the sizing rules; failures are report rows, not errors.

    The capacitance bound follows the sizing chain: the ripple formula is
    evaluated at the boundary inductance from the conduction rule, so the
    bound does not relax for designs that overshoot on L.
    """
    duty_clamped = min(max(design.duty, 0.0), 1.0)
    l_crit = critical_inductance(duty_clamped, design.load_r, design.freq)
    c_min = min_capacitance(duty_clamped, l_crit, design.freq) if l_crit > 0 else 0.0

    duty_from_timing = design.on_time / design.period
    freq_from_period = 1.0 / design.period
    timing_ok = (
        abs(design.duty - duty_from_timing) <= _CONSISTENCY_RTOL * max(abs(design.duty), 1.0)
        and abs(design.freq - freq_from_period) <= _CONSISTENCY_RTOL * design.freq
    )

    checks = (
        ConstraintCheck(
            "inductance_ccm",
            design.inductance >= l_crit,
            design.inductance,
            l_crit,
            "L >= (1-D)R/(2f)",
        ),
        ConstraintCheck(
            "capacitance_ripple",
            design.capacitance > c_min,
            design.capacitance,
            c_min,
            "C > (1-D)/(16Lf^2), strictly",
        ),
        ConstraintCheck(
            "duty_range",
            0 < design.duty <= 1,
            design.duty,
            1.0,
            "0 < D <= 1",
        ),
        ConstraintCheck(
            "timing_consistency",
            timing_ok,
            duty_from_timing,
            freq_from_period,
            "D = t1/T and f = 1/T",
        ),
    )
    return DesignReport(checks)


def power_path_step(vin: float, iin: float, design: ConverterDesign) -> tuple[float, float]:
    """Cycle-averaged transfer: returns (vout, iout) with P_out = efficiency * P_in."""
    if vin < 0 or iin < 0:
        raise DomainError("input electricals must be non-negative")
    vout = design.duty * vin
    if vout <= 0:
        return vout, 0.0
    iout = design.efficiency * vin * iin / vout
    return vout, iout
