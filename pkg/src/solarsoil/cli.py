"""Command-line front end: design report, P-V curve export, full simulation.

All three subcommands read the same config format and write deterministic
text: identical config bytes produce identical output bytes. Floating
values are printed with 9 significant digits, enough to make golden files
stable without echoing rounding noise.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import AppConfig, ConfigError, load_config
from .converter import (
    ConverterDesign,
    critical_inductance,
    duty_for_output,
    min_capacitance,
    validate_design,
)
from .errors import DomainError, InfeasibleBuckError, SimulationError
from .pv import mpp_oracle, pv_curve
from .sim import TimeSeriesRecord, run

SIMULATE_HEADER = (
    "t_s,g_wm2,v_pv,i_pv,p_pv,duty,v_out,i_out,p_out,"
    "soc,theta,humidity_pct,adc_code,pump_on,flow_lps"
)
CURVE_HEADER = "g_wm2,voltage_v,current_a,power_w"

EXIT_IO = 1
EXIT_VALIDATION_FAILED = 1
EXIT_DOMAIN = 4
EXIT_INFEASIBLE = 5


def fmt(x: float) -> str:
    # + 0.0 folds negative zero into plain "0"
    return format(x + 0.0, ".9g")


def cmd_design(cfg: AppConfig) -> tuple[str, int]:
    """Render the sizing report; exit 0 only when every constraint passes."""
    design = cfg.scenario.design
    lines = ["buck converter design"]
    if cfg.targets.vin is not None and cfg.targets.vout is not None:
        duty = duty_for_output(cfg.targets.vin, cfg.targets.vout)
        design = ConverterDesign(
            duty=duty,
            freq=design.freq,
            load_r=design.load_r,
            inductance=design.inductance,
            capacitance=design.capacitance,
            efficiency=design.efficiency,
        )
        lines.append(
            f"  duty from targets     : {fmt(cfg.targets.vout)} V / {fmt(cfg.targets.vin)} V"
        )
    l_crit = critical_inductance(design.duty, design.load_r, design.freq)
    c_min = min_capacitance(design.duty, l_crit, design.freq) if l_crit > 0 else 0.0
    lines += [
        f"  duty D                : {fmt(design.duty)}",
        f"  switching freq f (Hz) : {fmt(design.freq)}",
        f"  load R (ohm)          : {fmt(design.load_r)}",
        f"  inductance L (H)      : {fmt(design.inductance)}",
        f"  capacitance C (F)     : {fmt(design.capacitance)}",
        f"  critical L (H)        : {fmt(l_crit)}",
        f"  minimum C (F)         : {fmt(c_min)}",
        "",
        f"  {'check':<20} {'result':<6} {'value':>13} {'bound':>13}  rule",
    ]
    report = validate_design(design)
    for c in report.checks:
        verdict = "PASS" if c.passed else "FAIL"
        lines.append(
            f"  {c.name:<20} {verdict:<6} {fmt(c.value):>13} {fmt(c.bound):>13}  {c.note}"
        )
    lines += ["", f"  overall: {'PASS' if report.all_pass else 'FAIL'}"]
    return "\n".join(lines) + "\n", 0 if report.all_pass else EXIT_VALIDATION_FAILED


def cmd_curve(cfg: AppConfig) -> str:
    """P-V curve CSV: one block per irradiance level, MPP summary footers."""
    panel = cfg.scenario.panel
    t = cfg.scenario.ambient_t_k
    lines = [CURVE_HEADER]
    footers = []
    for g in cfg.curve.levels:
        for point in pv_curve(panel, g, t, cfg.curve.points):
            lines.append(f"{fmt(g)},{fmt(point.voltage)},{fmt(point.current)},{fmt(point.power)}")
        mpp = mpp_oracle(panel, g, t)
        footers.append(f"# mpp g_wm2={fmt(g)} v_mpp={fmt(mpp.voltage)} p_mpp={fmt(mpp.power)}")
    return "\n".join(lines + footers) + "\n"


def _simulate_row(r: TimeSeriesRecord) -> str:
    return ",".join(
        (
            fmt(r.t), fmt(r.g), fmt(r.v_pv), fmt(r.i_pv), fmt(r.p_pv), fmt(r.duty),
            fmt(r.v_out), fmt(r.i_out), fmt(r.p_out), fmt(r.soc), fmt(r.theta),
            fmt(r.humidity_pct), str(r.adc_code), "1" if r.pump_on else "0", fmt(r.flow),
        )
    )


def cmd_simulate(cfg: AppConfig) -> str:
    """Full scenario run as CSV, one row per step."""
    records = run(cfg.scenario)
    lines = [SIMULATE_HEADER]
    lines.extend(_simulate_row(r) for r in records)
    return "\n".join(lines) + "\n"


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        # fixed newline so output bytes do not depend on the platform
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="solarsoil",
        description="Design toolkit and simulator for a solar-powered soil-humidity controller.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, blurb in (
        ("design", "size and validate the buck converter"),
        ("curve", "export P-V curves with MPP summaries"),
        ("simulate", "run the full power-and-irrigation simulation"),
    ):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("--config", type=Path, help="scenario config file (defaults apply if omitted)")
        p.add_argument("--out", type=Path, help="output file (stdout if omitted)")
        p.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="SECTION.KEY=VALUE",
            help="override a config value after the file is loaded (repeatable)",
        )
    args = parser.parse_args(argv)

    text = ""
    if args.config is not None:
        try:
            text = args.config.read_text(encoding="utf-8")
        except OSError as e:
            print(f"error: cannot read config: {e}", file=sys.stderr)
            return EXIT_IO

    try:
        cfg = load_config(text, args.overrides)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    try:
        if args.command == "design":
            output, code = cmd_design(cfg)
        elif args.command == "curve":
            output, code = cmd_curve(cfg), 0
        else:
            output, code = cmd_simulate(cfg), 0
    except InfeasibleBuckError as e:
        print(f"error: infeasible design: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DomainError, SimulationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    _write(output, args.out)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
