"""Command-line interface.

Subcommands: pdoom, table, solve, ev, et, simulate-growth, calibrate-c0.
Every numeric config key is exposed as a flag; a --config file supplies
defaults and flags override it.  Exit codes: 0 success, 2 bad config or
domain input, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Optional, Sequence

from .compensation import ev_panel
from .config import RunConfig, parse_config
from .errors import ConfigError, ConvergenceError, DomainError, TaiWelfareError
from .growth import ProductionParams, asymptotic_growth_rate, simulate, trajectory_csv
from .hazards import (
    ConstantHazard,
    ExponentialPath,
    MountingLogHazard,
    OneOffHazard,
    ZeroHazard,
    expected_lifespan,
)
from .preferences import Preferences
from .solvers import (
    solve_T_delayed,
    solve_epsilon_mounting,
    solve_extinction_time,
    solve_p3_delayed,
    solve_p3_immediate,
    solve_p4_delayed,
)
from .tables import (
    TABLE_IDS,
    calibrate_c0,
    emit_table,
    format_cell,
    format_number,
    table_spec,
)
from .taxonomy import TaxonomyProbs, leaf_distribution, p_doom
from .welfare import ScenarioSpec

_CONFIG_FLAGS = (
    "c0", "g_baseline", "p1", "p2", "p3", "p4", "T", "epsilon",
    "saving_rate", "delta", "tech_growth", "quad_tol",
)
_LIST_FLAGS = ("g_ai_grid", "rho_grid", "theta_set")


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="key=value config file")
    for name in _CONFIG_FLAGS:
        parser.add_argument(f"--{name.replace('_', '-')}", type=float, default=None)
    for name in _LIST_FLAGS:
        parser.add_argument(
            f"--{name.replace('_', '-')}", type=str, default=None,
            help="comma-separated numbers",
        )
    parser.add_argument("--output-format", choices=("csv", "markdown"), default=None)


def _load_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config is not None:
        try:
            text = args.config.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        config = parse_config(text)
    updates: dict = {}
    for name in _CONFIG_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            updates[name] = value
    for name in _LIST_FLAGS:
        raw = getattr(args, name, None)
        if raw is not None:
            try:
                updates[name] = tuple(float(p) for p in raw.split(",") if p.strip())
            except ValueError:
                raise ConfigError(f"--{name}: expected comma-separated numbers") from None
    if getattr(args, "output_format", None) is not None:
        updates["output_format"] = args.output_format
    return dataclasses.replace(config, **updates) if updates else config


def _scenario(config: RunConfig, theta: float, g_ai: float, rho: float) -> ScenarioSpec:
    return ScenarioSpec(
        c0=config.resolved_c0(),
        g_ai=g_ai,
        g_baseline=config.g_baseline,
        prefs=Preferences(rho=rho, theta_rra=theta),
    )


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_pdoom(args: argparse.Namespace) -> int:
    config = _load_config(args)
    probs = TaxonomyProbs(
        p1=config.p1, p2=config.p2, p3=config.p3, p4=config.p4,
        horizon_years=args.horizon,
    )
    leaves = leaf_distribution(probs)
    print(f"p_doom,{format_number(p_doom(probs))}")
    for name in ("no_tai", "tai_no_takeover", "cornucopia",
                 "doom_immediate", "doom_delayed"):
        print(f"{name},{format_number(getattr(leaves, name))}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    config = _load_config(args)
    spec = table_spec(args.table_id, config)
    sys.stdout.write(emit_table(spec, config))
    return 0


_SOLVE_TARGETS = (
    "extinction-time", "p3-immediate", "p3-delayed", "p4-delayed",
    "T-delayed", "epsilon",
)


def _cmd_solve(args: argparse.Namespace) -> int:
    config = _load_config(args)
    spec = _scenario(config, args.theta, args.g_ai, args.rho)
    if args.target == "extinction-time":
        outcome = solve_extinction_time(spec)
    elif args.target == "p3-immediate":
        outcome = solve_p3_immediate(spec)
    elif args.target == "p3-delayed":
        outcome = solve_p3_delayed(spec, p4=config.p4, T=config.T)
    elif args.target == "p4-delayed":
        outcome = solve_p4_delayed(spec, p3=config.p3, T=config.T)
    elif args.target == "T-delayed":
        outcome = solve_T_delayed(spec, p3=config.p3, p4=config.p4)
    else:
        outcome = solve_epsilon_mounting(spec, quad_tol=config.quad_tol)
    print(format_cell(outcome))
    return 0


def _cmd_ev(args: argparse.Namespace) -> int:
    config = _load_config(args)
    spec = _scenario(config, 1.0, args.g_ai, args.rho)
    epsilon = config.epsilon
    if args.panel == "d" and getattr(args, "epsilon", None) is None:
        solved = solve_epsilon_mounting(
            _scenario(config, 1.0001, args.g_ai, args.rho), quad_tol=config.quad_tol
        )
        if not solved.is_value:
            print(format_cell(solved))
            return 0
        epsilon = solved.value
    result = ev_panel(
        spec, args.panel, T=config.T, p3=config.p3, p4=config.p4, epsilon=epsilon
    )
    print(f"ev,{format_number(result.ev)}")
    print(f"log_ev,{format_number(result.log_ev)}")
    print(f"wtp_fraction,{format_number(result.wtp_fraction)}")
    return 0


def _cmd_et(args: argparse.Namespace) -> int:
    config = _load_config(args)
    if args.hazard == "zero":
        model = ZeroHazard()
    elif args.hazard == "constant":
        if args.m is None:
            raise ConfigError("constant hazard needs --m")
        model = ConstantHazard(args.m)
    elif args.hazard == "one-off":
        if args.t_ext is None:
            raise ConfigError("one-off hazard needs --t-ext")
        model = OneOffHazard(args.t_ext)
    else:
        path = ExponentialPath(c0=config.resolved_c0() if args.normalized else 1.0,
                               growth=args.g_ai)
        model = MountingLogHazard(config.epsilon, path)
    et = expected_lifespan(model)
    print("inf" if et == float("inf") else format_number(et))
    return 0


def _cmd_simulate_growth(args: argparse.Namespace) -> int:
    config = _load_config(args)
    params = ProductionParams(
        alpha=args.alpha, gamma=args.gamma, sigma=args.sigma,
        share_hw=args.share_hw, psi=args.psi, chi=args.chi,
    )
    trajectory = simulate(
        params,
        K0=args.k0,
        saving_rate=config.saving_rate,
        delta=config.delta,
        tech_growth=config.tech_growth,
        horizon=args.horizon,
        dt=args.dt,
        regime=args.regime,
    )
    sys.stdout.write(trajectory_csv(trajectory))
    if args.print_growth_rate:
        print(f"# asymptotic_growth_rate,{asymptotic_growth_rate(trajectory):.6g}",
              file=sys.stderr)
    return 0


def _cmd_calibrate_c0(args: argparse.Namespace) -> int:
    config = _load_config(args)
    c0 = calibrate_c0(
        args.target, g_ai=args.anchor_g_ai, rho=args.anchor_rho,
        g_baseline=config.g_baseline,
    )
    print(format_number(c0))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tai-welfare",
        description="Welfare, extinction-risk thresholds, and growth regimes "
                    "for transformative-AI scenarios",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pdoom", help="outcome-tree probabilities")
    _add_config_flags(p)
    p.add_argument("--horizon", type=float, default=75.0)
    p.set_defaults(handler=_cmd_pdoom)

    p = sub.add_parser("table", help="emit one reference table")
    p.add_argument("table_id", choices=TABLE_IDS)
    _add_config_flags(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("solve", help="one indifference cell")
    p.add_argument("--target", choices=_SOLVE_TARGETS, required=True)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--g-ai", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    _add_config_flags(p)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("ev", help="one equivalent-variation cell")
    p.add_argument("--panel", choices=("a", "b", "c", "d"), required=True)
    p.add_argument("--g-ai", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    _add_config_flags(p)
    p.set_defaults(handler=_cmd_ev)

    p = sub.add_parser("et", help="expected lifespan of a hazard model")
    p.add_argument("--hazard", choices=("zero", "constant", "one-off", "mounting"),
                   required=True)
    p.add_argument("--m", type=float, default=None)
    p.add_argument("--t-ext", type=float, default=None)
    p.add_argument("--g-ai", type=float, default=0.2, dest="g_ai")
    p.add_argument("--normalized", action="store_true",
                   help="use the calibrated c0 instead of c0 = 1")
    _add_config_flags(p)
    p.set_defaults(handler=_cmd_et)

    p = sub.add_parser("simulate-growth", help="capital-accumulation trajectory CSV")
    p.add_argument("--regime", choices=("full_automation", "bottlenecked"),
                   default="full_automation")
    p.add_argument("--k0", type=float, default=1.0)
    p.add_argument("--horizon", type=float, default=200.0)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--sigma", type=float, default=-1.0)
    p.add_argument("--share-hw", type=float, default=0.5)
    p.add_argument("--psi", type=float, default=1.0)
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--print-growth-rate", action="store_true")
    _add_config_flags(p)
    p.set_defaults(handler=_cmd_simulate_growth)

    p = sub.add_parser("calibrate-c0", help="invert the anchor cell for c0")
    p.add_argument("--target", type=float, default=0.055282)
    p.add_argument("--anchor-g-ai", type=float, default=0.05)
    p.add_argument("--anchor-rho", type=float, default=0.05)
    _add_config_flags(p)
    p.set_defaults(handler=_cmd_calibrate_c0)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return 3
    except TaiWelfareError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
