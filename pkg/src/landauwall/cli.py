"""Command line interface: every computation behind one argparse front end.

Output contract shared by all subcommands:

  * CSV: header row, fixed column order, scalars at 17 significant digits.
  * JSON: a list of row objects whose keys repeat the CSV columns in order.
  * exit 0 on success, 2 on configuration/usage errors, 3 on numerical
    non-convergence.

An optional plain-text config file (key=value per line) supplies defaults;
explicit flags always win.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConvergenceError, DomainError, LandauWallError, PoleError
from .landau import (
    Params,
    boundary_coeff,
    cyclotron_radius,
    landau_level,
    peak_radius,
    radial_probability,
    resonance_index,
)
from .oracle import channel_audit, make_grid, richardson_eigenvalues
from .spectrum import (
    Gap,
    ScalarCondition,
    bound_state_profile,
    cluster,
    gap_above,
    gap_below_lowest,
    solve_mode,
    special_radii,
)
from .weyl import WeylSettings, mu

__all__ = ["RunConfig", "main"]

_CONDITIONS = {"paper": ScalarCondition.PAPER, "bs": ScalarCondition.BIRMAN_SCHWINGER}

_CLUSTER_COLUMNS = ["m", "n_gap", "E", "shift", "predicted_shift", "c_nm",
                    "multiplicity", "n_used", "residual"]


@dataclass(frozen=True)
class RunConfig:
    """Resolved run-wide settings after merging defaults, file, and flags."""

    B: float = 1.0
    a: float = 1.1
    alpha: float = -1.0
    condition: str = "paper"
    format: str = "csv"
    term_tol: float = 1e-12
    root_tol: float = 1e-10
    out: str | None = None

    def __post_init__(self):
        if self.condition not in _CONDITIONS:
            raise DomainError(f"condition must be one of {sorted(_CONDITIONS)}")
        if self.format not in ("csv", "json"):
            raise DomainError("format must be csv or json")

    @property
    def params(self) -> Params:
        return Params(self.B, self.a, self.alpha)

    @property
    def cond(self) -> ScalarCondition:
        return _CONDITIONS[self.condition]

    @property
    def settings(self) -> WeylSettings:
        return WeylSettings(term_tol=self.term_tol)


def _fmt_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return "%.17g" % float(v)


def _emit(config: RunConfig, header: list[str], rows) -> None:
    rows = [list(row) for row in rows]
    if config.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt_value(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        objs = []
        for row in rows:
            obj = {}
            for key, val in zip(header, row):
                if isinstance(val, (np.integer,)):
                    val = int(val)
                elif isinstance(val, (np.floating,)):
                    val = float(val)
                obj[key] = val
            objs.append(obj)
        text = json.dumps(objs, indent=2) + "\n"
    if config.out:
        with open(config.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_row(rec, params: Params):
    c = boundary_coeff(params.B, params.a,
                       rec.n_gap if rec.n_gap is not None else 0, rec.m)
    return [rec.m, rec.n_gap if rec.n_gap is not None else -1, rec.E,
            rec.shift, rec.predicted_shift, c.to_real(), rec.multiplicity,
            rec.n_used, rec.residual]


def _parse_gap(params: Params, text: str) -> Gap:
    if text == "below":
        return gap_below_lowest(params)
    try:
        n = int(text)
    except ValueError as exc:
        raise DomainError("--gap takes a level index or 'below'") from exc
    if n < 0:
        raise DomainError("gap index must be >= 0")
    return gap_above(params, n)


def cmd_levels(config: RunConfig, args) -> None:
    rows = [(n, landau_level(config.B, n)) for n in range(args.n_max + 1)]
    _emit(config, ["n", "E"], rows)


def cmd_coeff(config: RunConfig, args) -> None:
    m_values = range(args.m_max + 1) if args.m_max is not None else [args.m]
    rows = []
    for m in m_values:
        c = boundary_coeff(config.B, config.a, args.n, m)
        rows.append([args.n, m, c.to_real(),
                     c.log_abs if c.sign != 0 else -math.inf, 0])
    _emit(config, ["n", "m", "c_nm", "log_c_nm", "n_used"], rows)


def cmd_mu(config: RunConfig, args) -> None:
    rows = []
    for e in args.E:
        ev = mu(config.params, args.m, e, config.settings)
        rows.append([e, ev.value, ev.n_used, ev.tail_bound])
    _emit(config, ["E", "mu", "n_used", "tail_bound"], rows)


def cmd_solve(config: RunConfig, args) -> None:
    params = config.params
    gap = _parse_gap(params, args.gap)
    rec = solve_mode(params, args.m, gap, config.cond, config.settings,
                     root_tol=config.root_tol)
    rows = [_record_row(rec, params)] if rec is not None else []
    _emit(config, _CLUSTER_COLUMNS, rows)


def cmd_cluster(config: RunConfig, args) -> None:
    params = config.params
    recs = cluster(params, args.n, config.cond, config.settings,
                   stop_tol=args.stop_tol, m_cap=args.m_cap)
    _emit(config, _CLUSTER_COLUMNS, [_record_row(r, params) for r in recs])


def cmd_profile(config: RunConfig, args) -> None:
    params = config.params
    if args.E is not None:
        energy = args.E
    else:
        rec = solve_mode(params, args.m, _parse_gap(params, args.gap),
                         config.cond, config.settings, root_tol=config.root_tol)
        if rec is None:
            _emit(config, ["r", "value"], [])
            return
        energy = rec.E
    r_max = args.r_max if args.r_max is not None else params.a + 6.0 / math.sqrt(config.B)
    r = np.linspace(0.0, r_max, args.num)
    vals = bound_state_profile(params, args.m, energy, r, config.settings)
    _emit(config, ["r", "value"], zip(r, vals))


def cmd_density(config: RunConfig, args) -> None:
    r_max = args.r_max
    if r_max is None:
        r_max = 3.0 * max(peak_radius(config.B, args.n, args.m), config.a)
    r = np.linspace(0.0, r_max, args.num)
    vals = [radial_probability(config.B, args.n, args.m, ri) for ri in r]
    _emit(config, ["r", "value"], zip(r, vals))


def cmd_resonance(config: RunConfig, args) -> None:
    m_star, m_round = resonance_index(config.B, config.a, args.n)
    rows = [[args.n, config.a, m_star, m_round,
             peak_radius(config.B, args.n, max(m_round, 0)),
             cyclotron_radius(config.B, args.n)]]
    _emit(config, ["n", "a", "m_star", "m_star_rounded", "peak_radius",
                   "cyclotron_radius"], rows)


def cmd_special_radii(config: RunConfig, args) -> None:
    radii = special_radii(config.B, args.n, args.m)
    _emit(config, ["index", "radius"], list(enumerate(radii)))


def cmd_oracle(config: RunConfig, args) -> None:
    params = config.params
    grid = make_grid(params, n_target=args.n_target)
    vals = richardson_eigenvalues(params, args.m, grid,
                                  (-1e18, args.e_max),
                                  with_wall=not args.no_wall)
    _emit(config, ["index", "E"], list(enumerate(vals)))


def cmd_audit(config: RunConfig, args) -> None:
    params = config.params
    gap = _parse_gap(params, args.gap)
    rows, verdict = channel_audit(params, range(args.m_max + 1), gap)
    out = [[r.m, r.oracle_E, r.paper_E, r.bs_E, r.paper_err, r.bs_err,
            r.matched, verdict] for r in rows]
    _emit(config, ["m", "oracle_E", "paper_E", "bs_E", "paper_err",
                   "bs_err", "matched", "verdict"], out)


def cmd_figure(config: RunConfig, args) -> None:
    from .figures import render_figure

    out_dir = config.out if config.out else "."
    written = render_figure(args.name, out_dir, _fmt_value, config.cond,
                            config.settings)
    for path in written:
        sys.stdout.write(path + "\n")


def _load_config_file(path: str) -> dict:
    allowed = {"B", "a", "alpha", "condition", "format", "term_tol",
               "root_tol", "out"}
    overrides = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in allowed:
                raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
            if key in ("B", "a", "alpha", "term_tol", "root_tol"):
                overrides[key] = float(value)
            else:
                overrides[key] = value
    return overrides


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--B", type=float, default=None, help="field strength")
    common.add_argument("--a", type=float, default=None, help="wall radius")
    common.add_argument("--alpha", type=float, default=None,
                        help="wall coupling strength")
    common.add_argument("--condition", choices=sorted(_CONDITIONS), default=None,
                        help="scalar eigenvalue condition form")
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format")
    common.add_argument("--term-tol", type=float, default=None,
                        help="series term tolerance")
    common.add_argument("--root-tol", type=float, default=None,
                        help="root-finding relative tolerance")
    common.add_argument("--out", default=None,
                        help="output file (figure: output directory)")
    common.add_argument("--config", default=None,
                        help="key=value config file with defaults")

    parser = argparse.ArgumentParser(
        prog="landauwall",
        description="Spectral computations for the 2D Landau Hamiltonian "
                    "with a penetrable circular wall.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("levels", parents=[common], help="Landau levels")
    p.add_argument("--n-max", type=int, default=3)
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("coeff", parents=[common], help="boundary coefficients")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--m-max", type=int, default=None,
                   help="sweep m = 0..m_max instead of a single m")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("mu", parents=[common], help="Weyl coefficient values")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--E", type=float, nargs="+", required=True)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("solve", parents=[common], help="one eigenvalue in a gap")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--gap", default="0", help="gap index or 'below'")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("cluster", parents=[common],
                       help="eigenvalue cluster at a Landau level")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--stop-tol", type=float, default=None)
    p.add_argument("--m-cap", type=int, default=200)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("profile", parents=[common],
                       help="normalized bound-state radial profile")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--gap", default="0", help="gap index or 'below'")
    p.add_argument("--E", type=float, default=None,
                   help="explicit energy (skips solving)")
    p.add_argument("--r-max", type=float, default=None)
    p.add_argument("--num", type=int, default=801)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("density", parents=[common],
                       help="free-state radial probability 2 pi r |psi|^2")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--r-max", type=float, default=None)
    p.add_argument("--num", type=int, default=801)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("resonance", parents=[common],
                       help="resonant mode index for the wall radius")
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_resonance)

    p = sub.add_parser("special-radii", parents=[common],
                       help="wall radii with vanishing boundary coefficient")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.set_defaults(func=cmd_special_radii)

    p = sub.add_parser("oracle", parents=[common],
                       help="finite-difference channel eigenvalues")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--e-max", type=float, default=8.0)
    p.add_argument("--n-target", type=int, default=3)
    p.add_argument("--no-wall", action="store_true",
                   help="drop the delta wall (free channel)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("audit", parents=[common],
                       help="adjudicate condition forms against the oracle")
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--gap", default="0", help="gap index or 'below'")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("figure", parents=[common],
                       help="reproduce a named figure as CSV + SVG")
    p.add_argument("name", choices=("eig-gap", "free-vs-wall", "resonance"))
    p.set_defaults(func=cmd_figure)

    return parser


def _resolve_config(args) -> RunConfig:
    config = RunConfig()
    if args.config:
        config = replace(config, **_load_config_file(args.config))
    flag_overrides = {}
    for key in ("B", "a", "alpha", "condition", "format", "out"):
        val = getattr(args, key, None)
        if val is not None:
            flag_overrides[key] = val
    if getattr(args, "term_tol", None) is not None:
        flag_overrides["term_tol"] = args.term_tol
    if getattr(args, "root_tol", None) is not None:
        flag_overrides["root_tol"] = args.root_tol
    return replace(config, **flag_overrides)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
        config.params  # validate early
        args.func(config, args)
    except (ConvergenceError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (LandauWallError, DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
