"""Command-line interface.

Run configuration comes from an INI file (``--config``), overridden by
command-line flags; anything missing falls back to the 10 m reference bar
(interface at 4 m, F = 100 C, Ta = 25 C, h = 10).  Example file::

    [rod]
    length = 10
    interface = 4
    source_temp = 100
    ambient_temp = 25
    convection = 10

    [materials]
    A = Fe          ; symbol from the materials database, or a number
    B = Ag

    [bounds]
    kappa_min = 1
    kappa_max = 1000

    [experiment]
    mode = explicit ; explicit | uniform | fixed-offsets
    fluxes = 439, 440, 441
    epsilon = 2.0
    count = 10
    seed = 0

Exit status: 0 success, 2 bad arguments or configuration, 3 inadmissible
measurement, 4 finite-difference validation failure.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .elasticity import sample_curve, vertical_asymptote
from .errors import DomainError, MaterialFileError, MaterialNotFoundError
from .experiments import (ExperimentSpec, NoisePlan, emit_profile, example_spec,
                          run_experiment, summarize, EXAMPLE_IDS, RNG_NAME)
from .fd_oracle import fd_solve
from .inverse import DEFAULT_BOUNDS, ConductivityBounds, build_report
from .materials import load_materials, lookup
from .model import RodConfig, evaluate_temperature, heat_flux, interface_angle, solve_forward
from .output import fmt, round_sig, run_metadata, render_csv, write_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 3
EXIT_VALIDATION = 4

VALIDATION_TOLERANCE = 1e-6

ROD_DEFAULTS = {
    "length": 10.0,
    "interface": 4.0,
    "source_temp": 100.0,
    "ambient_temp": 25.0,
    "convection": 10.0,
}


class UsageError(Exception):
    pass


def _read_config_file(path):
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    parser.optionxform = str
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    except configparser.Error as exc:
        raise UsageError(f"cannot parse config file {path}: {exc}") from None
    known = {"rod", "materials", "bounds", "experiment"}
    unknown = set(parser.sections()) - known
    if unknown:
        raise UsageError(f"{path}: unknown section(s) {sorted(unknown)}")
    return {s: dict(parser[s]) for s in parser.sections()}


def _number(value, what):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise UsageError(f"{what}: expected a number, got {value!r}") from None


def _conductivity(value, what, materials):
    """A number, or a symbol resolved against the active materials."""
    try:
        return float(value)
    except ValueError:
        pass
    try:
        return lookup(value.strip(), materials).kappa
    except MaterialNotFoundError:
        symbols = ", ".join(m.symbol for m in materials)
        raise UsageError(f"{what}: unknown material {value!r} (known: {symbols})") from None


class Settings:
    """Merged view of flags, config file and defaults (in that order)."""

    def __init__(self, args):
        self.args = args
        self.file = _read_config_file(args.config) if args.config else {}
        try:
            self.materials = load_materials(args.materials)
        except MaterialFileError as exc:
            raise UsageError(str(exc)) from None

    def get(self, flag, section, key, default=None):
        value = getattr(self.args, flag, None)
        if value is not None:
            return value
        return self.file.get(section, {}).get(key, default)

    def rod(self) -> RodConfig:
        values = {}
        for key, default in ROD_DEFAULTS.items():
            values[key] = _number(self.get(key, "rod", key, default), f"rod.{key}")
        raw_B = self.args.kappa_B if self.args.kappa_B is not None else self.args.material_B
        if raw_B is None:
            raw_B = self.file.get("materials", {}).get("B")
        if raw_B is None:
            raise UsageError("material B is required: pass --material-B/--kappa-B or set [materials] B")
        values["kappa_B"] = _conductivity(str(raw_B), "material B", self.materials)
        try:
            return RodConfig(**values)
        except DomainError as exc:
            raise UsageError(f"invalid rod configuration: {exc}") from None

    def kappa_A(self) -> float:
        raw = self.args.kappa_A if getattr(self.args, "kappa_A", None) is not None \
            else getattr(self.args, "material_A", None)
        if raw is None:
            raw = self.file.get("materials", {}).get("A")
        if raw is None:
            raise UsageError("material A is required: pass --material-A/--kappa-A or set [materials] A")
        k = _conductivity(str(raw), "material A", self.materials)
        if not k > 0.0:
            raise UsageError(f"material A: conductivity must be positive, got {k}")
        return k

    def bounds(self) -> ConductivityBounds:
        lo = _number(self.get("kappa_min", "bounds", "kappa_min", DEFAULT_BOUNDS.kappa_min), "bounds.kappa_min")
        hi = _number(self.get("kappa_max", "bounds", "kappa_max", DEFAULT_BOUNDS.kappa_max), "bounds.kappa_max")
        try:
            return ConductivityBounds(lo, hi)
        except DomainError as exc:
            raise UsageError(str(exc)) from None


# -- subcommands -------------------------------------------------------------

def cmd_forward(args, out=sys.stdout):
    s = Settings(args)
    config = s.rod()
    kA = s.kappa_A()
    p = args.precision
    profile = solve_forward(config, kA)
    q = heat_flux(config, kA)
    print(f"u(L) = {fmt(evaluate_temperature(profile, config.length), p)}", file=out)
    print(f"q = {fmt(q, p)}", file=out)
    print(f"interface_angle = {fmt(interface_angle(config, kA), p)}", file=out)
    if args.out:
        data = emit_profile(config, kA, args.points)
        meta = run_metadata("profile", config, kappa_A=kA)
        write_table(args.out, "profile", data.rows(), meta, precision=p)
        print(f"wrote {args.out}", file=out)
    return EXIT_OK


def cmd_estimate(args, out=sys.stdout):
    s = Settings(args)
    config = s.rod()
    if not args.epsilon >= 0.0:
        raise UsageError(f"--epsilon must be non-negative, got {args.epsilon}")
    report = build_report(config, args.flux, args.epsilon, s.bounds())
    payload = round_sig(report.to_dict(), args.precision)
    json.dump(payload, out, indent=2)
    out.write("\n")
    return EXIT_OK if report.admissible else EXIT_INADMISSIBLE


def cmd_elasticity(args, out=sys.stdout):
    s = Settings(args)
    config = s.rod()
    p = args.precision
    q_bar = vertical_asymptote(config)
    q_lo = args.q_from if args.q_from is not None else 0.01 * q_bar
    q_hi = args.q_to if args.q_to is not None else 0.99 * q_bar
    try:
        curve = sample_curve(config, q_lo, q_hi, args.n)
    except DomainError as exc:
        raise UsageError(f"{exc} (asymptote q_asymptote = {fmt(q_bar, p)})") from None
    rows = list(zip(curve.flux.tolist(), curve.values.tolist()))
    meta = run_metadata("elasticity", config, q_asymptote=fmt(q_bar, p))
    if args.out:
        write_table(args.out, "elasticity", rows, meta, precision=p)
        print(f"q_asymptote = {fmt(q_bar, p)}", file=out)
        print(f"wrote {args.out}", file=out)
    else:
        # the asymptote travels in the metadata header so stdout stays valid CSV
        out.write(render_csv("elasticity", rows, meta, precision=p))
    return EXIT_OK


def _custom_spec(s: Settings) -> ExperimentSpec:
    exp = s.file.get("experiment")
    if exp is None:
        raise UsageError("table needs --example or a config file with an [experiment] section")
    config = s.rod()
    kA = s.kappa_A()
    mode = exp.get("mode", "explicit").strip()
    if mode == "explicit":
        if "fluxes" not in exp:
            raise UsageError("experiment.fluxes is required in explicit mode")
        plan = tuple(_number(v, "experiment.fluxes") for v in exp["fluxes"].split(",") if v.strip())
    else:
        try:
            plan = NoisePlan(
                mode=mode,
                epsilon=_number(exp.get("epsilon", 1.0), "experiment.epsilon"),
                count=int(_number(exp.get("count", 10), "experiment.count")),
                rng_seed=int(_number(exp.get("seed", 0), "experiment.seed")),
            )
        except DomainError as exc:
            raise UsageError(str(exc)) from None
    try:
        return ExperimentSpec(config=config, true_kappa_A=kA, measurements=plan, bounds=s.bounds())
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def cmd_table(args, out=sys.stdout):
    s = Settings(args)
    if args.example is not None:
        spec = example_spec(args.example, s.bounds())
    else:
        spec = _custom_spec(s)
    p = args.precision
    rows = run_experiment(spec)
    table = [(r.q_hat, r.kappa_hat, r.data_error, r.abs_error, r.rel_error, r.admissible) for r in rows]
    extra = {"true_kappa_A": spec.true_kappa_A, "true_flux": spec.true_flux}
    if isinstance(spec.measurements, NoisePlan):
        extra.update(noise_mode=spec.measurements.mode, epsilon=spec.measurements.epsilon,
                     rng_seed=spec.measurements.rng_seed, rng=RNG_NAME)
    meta = run_metadata("experiment", spec.config, **extra)

    try:
        summary = summarize(rows, spec)
        summary_lines = [
            f"max_rel_error = {fmt(summary.max_rel_error, p)}",
            f"mean_rel_error = {fmt(summary.mean_rel_error, p)}",
            f"elasticity_at_true_flux = {fmt(summary.elasticity_at_true_flux, p)}",
            f"mean_amplification = {fmt(summary.mean_amplification, p)}",
        ]
    except DomainError as exc:
        summary_lines = [f"summary unavailable: {exc}"]

    if args.out:
        write_table(args.out, "experiment", table, meta, precision=p)
        print(f"wrote {args.out}", file=out)
        for line in summary_lines:
            print(line, file=out)
    else:
        out.write(render_csv("experiment", table, meta, precision=p))
        for line in summary_lines:
            print(f"# summary.{line}", file=out)
    return EXIT_OK


def cmd_validate(args, out=sys.stdout):
    s = Settings(args)
    config = s.rod()
    kA = s.kappa_A()
    p = args.precision
    if args.cells < 4:
        raise UsageError(f"--cells must be at least 4, got {args.cells}")
    sol = fd_solve(config, kA, args.cells)
    exact = evaluate_temperature(solve_forward(config, kA), sol.node_positions)
    scale = max(abs(config.source_temp), abs(config.ambient_temp), abs(config.temp_drop))
    node_dev = float(np.max(np.abs(sol.node_temperatures - exact))) / scale
    q = heat_flux(config, kA)
    flux_dev = abs(sol.numeric_flux_at_L - q) / abs(q)
    ok = node_dev <= VALIDATION_TOLERANCE and flux_dev <= VALIDATION_TOLERANCE
    print(f"cells = {args.cells}", file=out)
    print(f"max_nodal_deviation = {fmt(node_dev, p)}", file=out)
    print(f"flux_deviation = {fmt(flux_dev, p)}", file=out)
    print(f"tolerance = {fmt(VALIDATION_TOLERANCE, p)}", file=out)
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_VALIDATION


# -- argument parsing --------------------------------------------------------

def _add_rod_options(parser, with_A=True):
    g = parser.add_argument_group("bar configuration (overrides --config)")
    g.add_argument("--config", type=Path, help="INI run configuration file")
    g.add_argument("--length", type=float)
    g.add_argument("--interface", type=float)
    g.add_argument("--source-temp", dest="source_temp", type=float)
    g.add_argument("--ambient-temp", dest="ambient_temp", type=float)
    g.add_argument("--convection", type=float)
    b = g.add_mutually_exclusive_group()
    b.add_argument("--material-B", dest="material_B", help="symbol of the known material")
    b.add_argument("--kappa-B", dest="kappa_B", type=float)
    if with_A:
        a = g.add_mutually_exclusive_group()
        a.add_argument("--material-A", dest="material_A")
        a.add_argument("--kappa-A", dest="kappa_A", type=float)
    g.add_argument("--kappa-min", dest="kappa_min", type=float)
    g.add_argument("--kappa-max", dest="kappa_max", type=float)
    parser.add_argument("--precision", type=int, default=6,
                        help="significant digits in printed output (default 6)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="thermoprobe",
        description="Estimate the conductivity of the hidden section of a two-material bar.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--materials", type=Path, default=None,
                        help="materials CSV merged over the built-ins "
                             "(default: $THERMOPROBE_MATERIALS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forward", help="temperature profile, flux and interface angle")
    _add_rod_options(p)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("estimate", help="estimate kappa_A from a flux measurement")
    _add_rod_options(p, with_A=False)
    p.add_argument("--flux", type=float, required=True)
    p.add_argument("--epsilon", type=float, default=0.0, help="noise level of the measurement")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("elasticity", help="sample the elasticity curve")
    _add_rod_options(p, with_A=False)
    p.add_argument("--from", dest="q_from", type=float)
    p.add_argument("--to", dest="q_to", type=float)
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_elasticity)

    p = sub.add_parser("table", help="run an estimation experiment")
    _add_rod_options(p)
    p.add_argument("--example", type=int, choices=EXAMPLE_IDS)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("validate", help="compare the closed form with the finite-volume solver")
    _add_rod_options(p)
    p.add_argument("--cells", type=int, default=100)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.precision < 1:
        print("thermoprobe: error: --precision must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out=out)
    except (UsageError, DomainError) as exc:
        print(f"thermoprobe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
