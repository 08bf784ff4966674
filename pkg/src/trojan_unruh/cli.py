"""Command-line front end.

    trojan-unruh report     --particle muon --n 12 --q 0.9562
    trojan-unruh sweep      --q-from 0.89 --q-to 1 --points 400 --format csv --out fig.csv
    trojan-unruh kinematics --particle muon --n 3
    trojan-unruh constants  --format json
    trojan-unruh verify

Exit codes: 0 success, 2 usage or domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .constants import CODATA2018, PARTICLES, get_particle
from .errors import DomainError
from .harmonic import STABILITY_WINDOW, check_window, q_of_scaled_field
from .kinematics import kinematics_report
from .rates import BEST_CONFINED_Q, Convention, dipole_matrix_elements, resonance_report
from .sweep import SWEEP_FIELDS, q_grid, sweep_rows
from .verify import DEFAULT_THRESHOLDS, closed_form_mode_ratios, dropped_radical_mode_ratios, run_checks

EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3

FAULTS = {"dropped-radical": dropped_radical_mode_ratios}


def format_number(value) -> str:
    """Locale-free cell text: 10 significant digits, empty for missing, 'infinite' for inf."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if math.isinf(value):
        return "infinite"
    return format(value, ".9e")


def _json_value(value):
    if isinstance(value, float) and math.isinf(value):
        return "infinite"
    return value


def render_records(records: list[dict], fmt: str, columns=None) -> str:
    columns = list(columns or (records[0].keys() if records else []))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([format_number(rec[c]) for c in columns])
        return buf.getvalue()
    if fmt == "json":
        data = [{c: _json_value(rec[c]) for c in columns} for rec in records]
        return json.dumps(data, indent=2) + "\n"
    cells = [[format_number(rec[c]) for c in columns] for rec in records]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def render_mapping(mapping: dict, fmt: str, raw: bool = False) -> str:
    """Key/value output. ``raw`` keeps float repr (exact pins) instead of scientific text."""

    def text(v):
        if raw and isinstance(v, float):
            return repr(v)
        return format_number(v)

    if fmt == "json":
        return json.dumps({k: _json_value(v) for k, v in mapping.items()}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for k, v in mapping.items():
            writer.writerow([k, text(v)])
        return buf.getvalue()
    width = max(len(k) for k in mapping)
    return "".join(f"{k.ljust(width)}  {text(v)}\n" for k, v in mapping.items())


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _selected_q(args) -> float:
    if args.scaled_field is not None:
        return q_of_scaled_field(args.scaled_field)
    return check_window(args.q)


def cmd_report(args) -> int:
    particle = get_particle(args.particle)
    q = _selected_q(args)
    convention = Convention(args.convention)
    rep = resonance_report(args.n, q, particle, convention)
    kin = kinematics_report(args.n, particle)
    if q < 1.0:
        x_elem, y_elem = dipole_matrix_elements(q, rep.omega, particle)
    else:
        x_elem = y_elem = None
    decay = None if particle.stable else rep.gamma_ud * particle.mean_lifetime
    out = {
        "particle": particle.name,
        "n": rep.n,
        "q": rep.q,
        "convention": convention.value,
        "omega_rad_per_s": rep.omega,
        "wavelength_nm": rep.drive.wavelength * 1e9,
        "field_amplitude_V_per_m": rep.drive.field_amplitude,
        "intensity_W_per_cm2": rep.drive.intensity_w_per_cm2,
        "x0_m": rep.drive.x0,
        "scaled_field": rep.drive.scaled_field,
        "energy_gap_J": rep.energy_gap,
        "gamma_ud_per_s": rep.gamma_ud,
        "gamma_sp_per_s": rep.gamma_sp,
        "ratio": rep.ratio,
        "gamma_ud_over_decay_rate": decay,
        "dipole_x_m": x_elem,
        "dipole_y_m": y_elem,
        "acceleration_m_per_s2": kin.acceleration,
        "acceleration_in_g": kin.acceleration_in_g,
        "beta": kin.beta,
        "gamma": kin.gamma,
        "davies_temperature_K": kin.davies_temperature,
        "revolutions_per_lifetime": kin.revolutions_per_lifetime,
    }
    _emit(render_mapping(out, args.format), args.out)
    return 0


def cmd_sweep(args) -> int:
    particle = get_particle(args.particle)
    qs = q_grid(args.q_from, args.q_to, args.points, args.grid)
    rows = sweep_rows(qs, particle, args.n, Convention(args.convention))
    _emit(render_records([r.as_record() for r in rows], args.format, SWEEP_FIELDS), args.out)
    return 0


def cmd_kinematics(args) -> int:
    particle = get_particle(args.particle)
    kin = kinematics_report(args.n, particle)
    out = {
        "particle": particle.name,
        "n": kin.n,
        "acceleration_m_per_s2": kin.acceleration,
        "acceleration_in_g": kin.acceleration_in_g,
        "beta": kin.beta,
        "gamma": kin.gamma,
        "davies_temperature_K": kin.davies_temperature,
        "revolutions_per_lifetime": kin.revolutions_per_lifetime,
    }
    _emit(render_mapping(out, args.format), args.out)
    return 0


def constants_table() -> dict:
    table: dict = dict(CODATA2018.as_dict())
    table["fine_structure_from_table"] = CODATA2018.fine_structure_from_table()
    for name, p in PARTICLES.items():
        table[f"{name}.mass_ratio"] = p.mass_ratio
        table[f"{name}.charge_magnitude"] = p.charge_magnitude
        table[f"{name}.mean_lifetime_s"] = "stable" if p.stable else p.mean_lifetime
    table["best_confined_q"] = BEST_CONFINED_Q
    table["stability_q_min"] = STABILITY_WINDOW.q_min
    table["stability_scaled_field_max"] = STABILITY_WINDOW.scaled_field_max
    return table


def cmd_constants(args) -> int:
    _emit(render_mapping(constants_table(), args.format, raw=True), args.out)
    return 0


def _parse_check(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or name not in DEFAULT_THRESHOLDS:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE with NAME one of {sorted(DEFAULT_THRESHOLDS)}")
    return name, float(value)


def cmd_verify(args) -> int:
    mode_ratios = FAULTS[args.inject_fault] if args.inject_fault else closed_form_mode_ratios
    results = run_checks(dict(args.check or []), args.tolerance, mode_ratios)
    if args.format == "json":
        text = json.dumps([r.as_dict() for r in results], indent=2) + "\n"
    else:
        records = [
            {"status": "PASS" if r.passed else "FAIL", "check": r.name, "error": r.error,
             "threshold": r.threshold, "detail": r.detail}
            for r in results
        ]
        text = render_records(records, "csv" if args.format == "csv" else "text")
    _emit(text, args.out)
    return 0 if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trojan-unruh",
        description="Unruh-Davies and spontaneous emission of Trojan wavepackets.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    def output_args(p, default="text"):
        p.add_argument("--format", choices=("csv", "json", "text"), default=default)
        p.add_argument("--out", help="write to this path instead of stdout")

    physics = argparse.ArgumentParser(add_help=False)
    physics.add_argument("--particle", default="muon", help=f"one of {sorted(PARTICLES)}")
    physics.add_argument("--n", type=int, default=1, help="resonant Rydberg number")
    physics.add_argument("--convention", choices=[c.value for c in Convention], default="calibrated")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[physics], help="rates and drive at one point")
    output_args(p)
    point = p.add_mutually_exclusive_group()
    point.add_argument("--q", type=float, default=BEST_CONFINED_Q)
    point.add_argument("--scaled-field", type=float)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sweep", parents=[physics], help="table of shapes and rates over q")
    output_args(p, default="csv")
    p.add_argument("--q-from", type=float, default=0.89)
    p.add_argument("--q-to", type=float, default=1.0)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--grid", choices=("q", "scaled-field"), default="q")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("kinematics", help="acceleration, beta, Unruh temperature")
    output_args(p)
    p.add_argument("--particle", default="muon")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_kinematics)

    p = sub.add_parser("constants", help="pinned constants and particle registry")
    output_args(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", help="run the oracle suite")
    output_args(p)
    p.add_argument("--tolerance", type=float, help="replace every threshold")
    p.add_argument("--check", type=_parse_check, action="append", metavar="NAME=VALUE",
                   help="override one threshold")
    p.add_argument("--inject-fault", choices=sorted(FAULTS), help="check a deliberately wrong closed form")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
