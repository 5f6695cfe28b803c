"""Command-line front end writing CSV/JSON for plotting and regression checks.

Exit status: 0 on success, 1 for invalid input or configuration, 2 for a
numerical failure or a failed verification.
"""

import argparse
import csv
import json
import math
import sys
from dataclasses import replace

import numpy as np

from . import fd, solutions, sweep
from .errors import DomainError, NumericalFailure, ParameterError
from .params import CylinderGeometry, PhysicalParams, derive_quantities, validate

CONFIG_KEYS = {
    "mu_r": ("params", "mu_r"),
    "sigma_s_per_m": ("params", "sigma"),
    "frequency_hz": ("params", "frequency"),
    "r1_m": ("geom", "r1"),
    "r2_m": ("geom", "r2"),
    "k": ("geom", "k"),
}
FLAG_FOR_KEY = {
    "mu_r": "mu_r",
    "sigma_s_per_m": "sigma",
    "frequency_hz": "frequency",
    "r1_m": "r1",
    "r2_m": "r2",
    "k": "k",
}

EVAL_COLUMNS = ["r_m", "ref_re", "ref_im", "order1_re", "order1_im",
                "order2_re", "order2_im", "imp_re", "imp_im"]
PROFILE_COLUMNS = ["r_m", "exact_re", "exact_im", "prof0_re", "prof0_im", "prof1_re", "prof1_im"]
SWEEP_COLUMNS = ["mu_r", "frequency_hz", "epsilon", "delta_m",
                 "err_order1", "err_order2", "err_impedance", "in_regime"]

VERIFY_MAX_ERROR = 1e-3
VERIFY_MAX_ERROR_FROM_GRID = 4096
VERIFY_RATIO = (3.5, 4.5)
DEFAULT_VERIFY_GRIDS = (1024, 2048, 4096)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def load_config(path, overrides):
    """Merge a flat JSON config with command-line overrides into params and geometry.

    Without a config file the defaults are the reference cylinder
    (mu_r 4000, sigma 2e6 S/m, 10 Hz, R1 0.03 m, R2 0.04 m, k 1).
    """
    values = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        try:
            data = json.loads(text) if text.strip() else {}
        except json.JSONDecodeError as exc:
            raise UsageError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError(f"config {path} must hold a JSON object")
        unknown = sorted(set(data) - set(CONFIG_KEYS))
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(unknown)}")
        values.update(data)

    for key, flag in FLAG_FOR_KEY.items():
        if overrides.get(flag) is not None:
            values[key] = overrides[flag]

    if path is not None:
        missing = [key for key in CONFIG_KEYS if key not in values]
        if missing:
            raise UsageError(f"config {path} is missing keys: {', '.join(missing)}")

    fields = {"params": {}, "geom": {}}
    for key, value in values.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise UsageError(f"config key {key} must be a number, got {value!r}")
        group, name = CONFIG_KEYS[key]
        fields[group][name] = float(value)
    params = PhysicalParams(**fields["params"])
    geom = CylinderGeometry(**fields["geom"])
    validate(params, geom)
    return params, geom


def _fmt(x):
    return repr(float(x))


def _open_output(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline="", encoding="utf-8"), True


def write_rows(path, header, rows):
    fh, close = _open_output(path)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
    finally:
        if close:
            fh.close()


def _complex_cols(values):
    for v in values:
        yield _fmt(v.real)
        yield _fmt(v.imag)


def cmd_eval(args, params, geom):
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    derived = derive_quantities(params)
    r = np.linspace(geom.r1, geom.r2, args.samples)
    exact = solutions.solve_global(params, geom)
    asym = solutions.solve_asymptotics(geom)
    imp = solutions.solve_impedance(derived, geom)
    cols = [
        solutions.eval_global(exact, params, geom, r),
        solutions.eval_asymptotic(1, asym, derived, geom, r),
        solutions.eval_asymptotic(2, asym, derived, geom, r),
        solutions.eval_impedance(imp, geom, r),
    ]
    rows = ([_fmt(ri), *_complex_cols(vals)] for ri, *vals in zip(r, *cols))
    write_rows(args.output, EVAL_COLUMNS, rows)
    return 0


def cmd_profile(args, params, geom):
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    if args.depth_multiples <= 0:
        raise UsageError("--depth-multiples must be > 0")
    derived = derive_quantities(params)
    depth = args.depth_multiples * derived.delta
    if depth >= geom.r1:
        raise UsageError(f"depth {depth:.3g} m reaches the axis (R1 = {geom.r1} m)")
    h = np.linspace(0.0, depth, args.samples)
    r = geom.r1 - h
    exact = solutions.eval_global(solutions.solve_global(params, geom), params, geom, r)
    terms = solutions.profile_terms(derived, geom)
    p0 = solutions.eval_profile_interior(0, terms, derived, geom, h)
    p1 = solutions.eval_profile_interior(1, terms, derived, geom, h)
    rows = ([_fmt(ri), *_complex_cols(vals)] for ri, *vals in zip(r, exact, p0, p1))
    write_rows(args.output, PROFILE_COLUMNS, rows)
    return 0


def _sweep_rows(records):
    for rec in records:
        yield [
            _fmt(rec.mu_r), _fmt(rec.frequency), _fmt(rec.epsilon), _fmt(rec.delta),
            _fmt(rec.err_order1), _fmt(rec.err_order2), _fmt(rec.err_impedance),
            "true" if rec.in_regime else "false",
        ]


def _report_failures(records):
    failed = [r for r in records if r.failure]
    for rec in failed:
        print(f"point mu_r={rec.mu_r} f={rec.frequency}: {rec.failure}", file=sys.stderr)
    return 2 if failed else 0


def cmd_sweep_mu(args, params, geom):
    if args.mu_points < 1 or args.mu_min <= 0 or args.mu_max < args.mu_min:
        raise UsageError("need 0 < --mu-min <= --mu-max and --mu-points >= 1")
    mus = np.geomspace(args.mu_min, args.mu_max, args.mu_points)
    records = sweep.sweep_mu(params, geom, mus)
    write_rows(args.output, SWEEP_COLUMNS, _sweep_rows(records))
    return _report_failures(records)


def cmd_sweep_freq(args, params, geom):
    if args.f_points < 1 or args.f_min <= 0 or args.f_max < args.f_min:
        raise UsageError("need 0 < --f-min <= --f-max and --f-points >= 1")
    freqs = np.geomspace(args.f_min, args.f_max, args.f_points)
    records = sweep.sweep_freq(params, geom, freqs)
    write_rows(args.output, SWEEP_COLUMNS, _sweep_rows(records))
    return _report_failures(records)


def read_sweep_csv(path):
    """Parse a sweep CSV back into `SweepRecord` objects (bit-exact floats)."""
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != SWEEP_COLUMNS:
            raise UsageError(f"{path}: expected header {','.join(SWEEP_COLUMNS)}")
        records = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(SWEEP_COLUMNS) or row[-1] not in ("true", "false"):
                raise UsageError(f"{path}:{lineno}: malformed row")
            try:
                nums = [float(x) for x in row[:-1]]
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: {exc}") from exc
            errs = nums[4:7]
            records.append(sweep.SweepRecord(
                mu_r=nums[0], frequency=nums[1], epsilon=nums[2], delta=nums[3],
                err_order1=errs[0], err_order2=errs[1], err_impedance=errs[2],
                in_regime=row[-1] == "true",
                failure="missing error value" if any(math.isnan(e) for e in errs) else None,
            ))
    return records


def cmd_slopes(args, params, geom):
    records = read_sweep_csv(args.input)
    windows = ["all", "low-freq"] if args.fit_window is None else [args.fit_window]
    out = []
    for window in windows:
        for model in sweep.MODELS:
            try:
                fit = sweep.fit_sweep(records, model, window)
            except DomainError as exc:
                if args.fit_window is None and window == "low-freq":
                    continue
                raise UsageError(f"{model} ({window}): {exc}") from exc
            out.append({"model": model, "slope": fit.slope, "r2": fit.r_squared,
                        "n_points": fit.n_points, "window": window})
    fh, close = _open_output(args.output)
    try:
        json.dump(out, fh, indent=2)
        fh.write("\n")
    finally:
        if close:
            fh.close()
    return 0


def cmd_verify(args, params, geom):
    grids = sorted(args.grid or DEFAULT_VERIFY_GRIDS)
    if any(n < 2 * fd.MIN_CELLS for n in grids):
        raise UsageError(f"--grid values must be >= {2 * fd.MIN_CELLS}")
    errors = [fd.oracle_error_vs_analytic(params, geom, n) for n in grids]
    ok = True
    lines = []
    for n, err in zip(grids, errors):
        flag = ""
        if n >= VERIFY_MAX_ERROR_FROM_GRID and err > VERIFY_MAX_ERROR:
            ok, flag = False, f"  FAIL (> {VERIFY_MAX_ERROR:g})"
        lines.append(f"grid {n:6d}  rel_l21_error {err:.6e}{flag}")
    for (n0, e0), (n1, e1) in zip(zip(grids, errors), zip(grids[1:], errors[1:])):
        ratio = e0 / e1
        flag = ""
        if n1 == 2 * n0 and not VERIFY_RATIO[0] <= ratio <= VERIFY_RATIO[1]:
            ok, flag = False, f"  FAIL (outside [{VERIFY_RATIO[0]}, {VERIFY_RATIO[1]}])"
        lines.append(f"ratio {n0}->{n1}  {ratio:.4f}{flag}")
    fh, close = _open_output(args.output)
    try:
        fh.write("\n".join(lines) + "\n")
    finally:
        if close:
            fh.close()
    if not ok:
        print("verification failed", file=sys.stderr)
        return 2
    return 0


def build_parser():
    parser = _Parser(prog="eddycyl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--config", help="flat JSON config file")
    common.add_argument("--output", help="output file (default: standard output)")
    common.add_argument("--mu-r", dest="mu_r", type=float)
    common.add_argument("--sigma", type=float, help="conductivity in S/m")
    common.add_argument("--frequency", type=float, help="frequency in Hz")
    common.add_argument("--r1", type=float, help="core radius in m")
    common.add_argument("--r2", type=float, help="outer radius in m")
    common.add_argument("--k", type=float, help="Dirichlet constant, A(R2) = k/R2")

    p = sub.add_parser("eval", parents=[common], help="exact and model solutions on [R1, R2]")
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("profile", parents=[common], help="core solution vs boundary-layer profiles")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--depth-multiples", type=float, default=3.0)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("sweep-mu", parents=[common], help="errors over a permeability range")
    p.add_argument("--mu-min", type=float, default=250.0)
    p.add_argument("--mu-max", type=float, default=16000.0)
    p.add_argument("--mu-points", type=int, default=7)
    p.set_defaults(func=cmd_sweep_mu)

    p = sub.add_parser("sweep-freq", parents=[common], help="errors over a frequency range")
    p.add_argument("--f-min", type=float, default=10.0)
    p.add_argument("--f-max", type=float, default=2000.0)
    p.add_argument("--f-points", type=int, default=24)
    p.set_defaults(func=cmd_sweep_freq)

    p = sub.add_parser("slopes", parents=[common], help="log-log slopes from a sweep CSV")
    p.add_argument("input", help="sweep CSV written by sweep-mu or sweep-freq")
    p.add_argument("--fit-window", choices=["all", "low-freq"])
    p.set_defaults(func=cmd_slopes)

    p = sub.add_parser("verify", parents=[common], help="finite-volume oracle convergence check")
    p.add_argument("--grid", type=int, action="append", help="total cell count (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    overrides = {name: getattr(args, name) for name in FLAG_FOR_KEY.values()}
    try:
        params, geom = load_config(args.config, overrides)
        return args.func(args, params, geom)
    except (UsageError, ParameterError, DomainError) as exc:
        print(f"eddycyl {args.command}: {exc}", file=sys.stderr)
        return 1
    except NumericalFailure as exc:
        print(f"eddycyl {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 2
