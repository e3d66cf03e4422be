"""Command line front end: reproducible runs emitting CSV/JSON tables.

Commands mirror the pipeline: `fit-drude`, `epsilon`, `force`, `residuals`,
`yukawa-limit`.  Identical config and inputs give byte-identical output
(fixed column order, fixed float formatting, fixed summation order).

Exit codes: 0 success, 1 compute error, 2 input or config error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import grid_theory, load_experiment, residual_report
from .config import load_run_config, resolve_data_path
from .dielectric import fit_drude, resistivity
from .errors import ConfigError, ConvergenceError, DataFormatError
from .lifshitz import Geometry, ThermalState, force_finite_T, force_zero_T, ideal_force
from .optical import load_dataset
from .yukawa import ConstraintGeometry, allowed_lambda_boundary, alpha_lower_limit


def _fmt(value) -> str:
    """Machine format: 9 significant digits, empty string for missing."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{value:.9e}"


def _fmt_human(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{value:.4g}"


def _render(columns, rows, summary, fmt):
    if fmt == "json":
        payload = {"columns": list(columns),
                   "rows": [list(r) for r in rows]}
        if summary:
            payload["summary"] = summary
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "table":
        width = max(len(c) for c in columns)
        lines = []
        for row in rows:
            for name, value in zip(columns, row):
                lines.append(f"{name:<{width}}  {_fmt_human(value)}")
        for key, value in (summary or {}).items():
            lines.append(f"{key:<{width}}  {_fmt_human(value)}")
        return "\n".join(lines) + "\n"
    # csv
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    for key, value in (summary or {}).items():
        lines.append(f"# {key}={_fmt(value)}")
    return "\n".join(lines) + "\n"


def _emit(args, columns, rows, summary=None, default_fmt="csv"):
    fmt = args.output or default_fmt
    text = _render(columns, rows, summary, fmt)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _require_config(args):
    if not args.config:
        raise ConfigError("this command needs --config <file>")
    return load_run_config(args.config)


def cmd_fit_drude(args) -> int:
    if args.dataset:
        ds = load_dataset(resolve_data_path(args.dataset))
    else:
        cfg = _require_config(args)
        ds = cfg.load_dataset()
        if ds is None:
            raise ConfigError("config declares no dataset to fit")
    fit = fit_drude(ds, (args.range[0], args.range[1]),
                    omega_p_fixed=args.fixed_omega_p)
    p = fit.parameters
    columns = ("omega_p_1e16_s", "omega_tau_1e13_s", "rho_micro_ohm_cm",
               "rms_log_residual", "n_points")
    rows = [(p.omega_p / 1e16, p.omega_tau / 1e13, resistivity(p),
             fit.rms_log_residual, fit.n_points)]
    _emit(args, columns, rows, default_fmt="table")
    return 0


def _zeta_grid(args):
    if args.zeta is not None:
        return [args.zeta]
    if args.zeta_range is None:
        raise ConfigError("epsilon needs --zeta or --zeta-range LO HI N")
    lo, hi, n = args.zeta_range
    n = int(n)
    if not 0 < lo < hi or n < 2:
        raise ConfigError("--zeta-range needs 0 < LO < HI and N >= 2")
    return list(np.logspace(math.log10(lo), math.log10(hi), n))


def cmd_epsilon(args) -> int:
    cfg = _require_config(args)
    _, drude, model = cfg.build_evaluator()
    rows = []
    for zeta in _zeta_grid(args):
        if model is None:
            eps1 = drude.epsilon(zeta) - 1.0
            rows.append((zeta, eps1, 0.0, 0.0, 1.0 + eps1))
        else:
            dec = model.decompose(zeta, epsrel=cfg.kk_epsrel)
            rows.append((zeta, dec.eps1, dec.eps2_part, dec.eps3_part, dec.total))
    _emit(args, ("zeta_rad_s", "eps1", "eps2_part", "eps3_part", "total"), rows)
    return 0


def _separations_m(args):
    if args.a is not None:
        return [args.a * 1e-9]
    if args.a_range is None:
        raise ConfigError("force needs --a NM or --a-range LO_NM HI_NM N")
    lo, hi, n = args.a_range
    n = int(n)
    if not 0 < lo < hi or n < 2:
        raise ConfigError("--a-range needs 0 < LO < HI and N >= 2")
    return [a * 1e-9 for a in np.linspace(lo, hi, n)]


def cmd_force(args) -> int:
    cfg = _require_config(args)
    eps, _, _ = cfg.build_evaluator()
    thermal = ThermalState(cfg.temperature)
    rows = []
    for a in _separations_m(args):
        g = Geometry(cfg.sphere_radius, a)
        n0 = dtf = None
        if args.mode == "zero_T":
            force = force_zero_T(g, eps, cfg.settings)
        else:
            result = force_finite_T(g, thermal, eps, cfg.prescription,
                                    cfg.settings)
            force, n0 = result.total, result.n0_term
            if args.mode == "both":
                dtf = force - force_zero_T(g, eps, cfg.settings)
        rows.append((a * 1e9, force, n0, dtf, force / ideal_force(g)))
    _emit(args, ("a_nm", "F_pN", "n0_pN", "dTF_pN", "eta"), rows)
    return 0


def cmd_residuals(args) -> int:
    cfg = _require_config(args)
    records = load_experiment(resolve_data_path(args.experiment))
    range_filter = None
    if args.a_min is not None or args.a_max is not None:
        range_filter = ((args.a_min or 0.0) * 1e-9,
                        (args.a_max if args.a_max is not None else math.inf) * 1e-9)
    eps, _, _ = cfg.build_evaluator()
    thermal = ThermalState(cfg.temperature)

    def theory(a: float) -> float:
        return force_finite_T(Geometry(cfg.sphere_radius, a), thermal, eps,
                              cfg.prescription, cfg.settings).total

    if args.grid:
        span = sorted({r.separation for r in records})
        if len(span) >= 2 and args.grid >= 2:
            theory = grid_theory(theory, span[0], span[-1], args.grid)
    report = residual_report(records, theory, range_filter)
    rows = [(r.separation * 1e9, r.force_measured, r.force_theory, r.delta_f,
             r.sigma_ratio) for r in report.rows]
    summary = {"rms_pN": report.rms_deviation,
               "max_sigma_exceedance": report.max_sigma_exceedance,
               "n_rows": len(rows)}
    _emit(args, ("a_nm", "F_exp_pN", "F_theor_pN", "dF_pN", "dF_over_sigma"),
          rows, summary)
    if args.plot_out:
        lines = [f"{_fmt(r[0])} {_fmt(r[3])}" for r in rows]
        Path(args.plot_out).write_text("\n".join(lines) + "\n")
    return 0


def cmd_yukawa_limit(args) -> int:
    geom = ConstraintGeometry(args.separation * 1e-9,
                              args.film_thickness * 1e-9)
    lo, hi, n = args.lambda_min, args.lambda_max, int(args.points)
    if not 0 < lo < hi or n < 2:
        raise ConfigError("need 0 < --lambda-min < --lambda-max and --points >= 2")
    grid = np.logspace(math.log10(lo * 1e-9), math.log10(hi * 1e-9), n)
    rows = [(lam * 1e9, alpha_lower_limit(float(lam), geom, args.residual_bound))
            for lam in grid]
    summary = {}
    try:
        boundary = allowed_lambda_boundary(geom, args.alpha_ceiling,
                                           args.residual_bound)
        summary["lambda_star_nm"] = boundary.lambda_star * 1e9
        summary["boson_mass_ev"] = boundary.boson_mass_ev
    except ConvergenceError:
        bracket_lo, bracket_hi = 5e-9, 500e-9
        if alpha_lower_limit(bracket_lo, geom, args.residual_bound) < args.alpha_ceiling:
            summary["status"] = "unconstrained: limit below ceiling over the whole bracket"
        else:
            summary["status"] = "excluded: limit above ceiling over the whole bracket"
    _emit(args, ("lambda_nm", "alpha_min"), rows, summary)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="run configuration file (INI)")
    common.add_argument("--output", choices=("csv", "json", "table"),
                        help="output format (default csv; fit-drude: table)")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="aucasimir",
        description="Casimir force between gold surfaces and residual-force "
                    "analysis")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit-drude", parents=[common],
                       help="fit Drude parameters to optical data")
    p.add_argument("--dataset", help="optical data file (else from config)")
    p.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"),
                   required=True, help="fit range in rad/s")
    p.add_argument("--fixed-omega-p", type=float, default=None,
                   help="hold the plasma frequency fixed [rad/s]")
    p.set_defaults(func=cmd_fit_drude)

    p = sub.add_parser("epsilon", parents=[common],
                       help="eps(i zeta) table with decomposition")
    p.add_argument("--zeta", type=float, help="single zeta [rad/s]")
    p.add_argument("--zeta-range", nargs=3, type=float, metavar=("LO", "HI", "N"),
                   help="log-spaced zeta grid [rad/s]")
    p.set_defaults(func=cmd_epsilon)

    p = sub.add_parser("force", parents=[common],
                       help="sphere-plate force table")
    p.add_argument("--a", type=float, help="separation [nm]")
    p.add_argument("--a-range", nargs=3, type=float, metavar=("LO", "HI", "N"),
                   help="linear separation grid [nm]")
    p.add_argument("--mode", choices=("finite_T", "zero_T", "both"),
                   default="finite_T")
    p.set_defaults(func=cmd_force)

    p = sub.add_parser("residuals", parents=[common],
                       help="experiment-theory residual report")
    p.add_argument("--experiment", required=True,
                   help="experiment CSV (a_nm, F_pN, sigma_pN)")
    p.add_argument("--a-min", type=float, help="range filter low edge [nm]")
    p.add_argument("--a-max", type=float, help="range filter high edge [nm]")
    p.add_argument("--grid", type=int, default=0,
                   help="evaluate theory on an N-point grid + interpolation")
    p.add_argument("--plot-out", help="also write two-column (a_nm, dF_pN) file")
    p.set_defaults(func=cmd_residuals)

    p = sub.add_parser("yukawa-limit", parents=[common],
                       help="Yukawa coupling lower limit vs wavelength")
    p.add_argument("--residual-bound", type=float, default=10.0,
                   help="residual force floor [pN] (default 10)")
    p.add_argument("--alpha-ceiling", type=float, default=1.5e-22,
                   help="astrophysical ceiling on alpha")
    p.add_argument("--separation", type=float, default=63.0,
                   help="minimal separation [nm]")
    p.add_argument("--film-thickness", type=float, default=96.0,
                   help="gold film thickness [nm]")
    p.add_argument("--lambda-min", type=float, default=10.0,
                   help="grid low edge [nm]")
    p.add_argument("--lambda-max", type=float, default=1000.0,
                   help="grid high edge [nm]")
    p.add_argument("--points", type=int, default=30, help="grid size")
    p.set_defaults(func=cmd_yukawa_limit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DataFormatError, OSError, ValueError) as exc:
        print(f"aucasimir: error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, ArithmeticError, RuntimeError) as exc:
        print(f"aucasimir: compute error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
