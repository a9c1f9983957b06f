"""Baseline-consumption calibration and the indifference/EV table pipeline.

The normalized baseline consumption c0 is not an observable; it is pinned by
requiring one published anchor cell to hold exactly.  The default anchor is
the immediate-misalignment threshold p3 = 1 - W0/W_cornucopia at theta = 1,
g_ai = 0.05, rho = 0.05 with target 0.055282, which inverts in closed form to

    log c0 = ((1 - p3) g_ai - g_baseline) / (rho * p3).

Every other cell of every table is then an out-of-sample check.

Table ids: t1 (extinction time), t2 (immediate misalignment probability),
t3a/t3b/t3c (delayed lottery solved for p3/p4/T), t4 (mounting hazard
slope), t5a-t5d (equivalent variation panels).  Layout is one row per g_ai
and one column per (theta, rho) pair.  Sentinel outcomes render as the
tokens NO_TAI_PREFERRED (a negative implied threshold), TAI_PREFERRED (an
implied probability above one) and NO_SOLUTION (no root in the admissible
domain); per-cell solver failures render as ERROR:<reason> without aborting
the rest of the table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .compensation import ev_panel
from .config import DEFAULT_G_AI_GRID, DEFAULT_RHO_GRID, RunConfig
from .errors import ConfigError, DomainError, QuadratureError, TaiWelfareError
from .preferences import Preferences
from .solvers import (
    SolveOutcome,
    solve_T_delayed,
    solve_epsilon_mounting,
    solve_extinction_time,
    solve_p3_delayed,
    solve_p3_immediate,
    solve_p4_delayed,
)
from .welfare import ScenarioSpec

__all__ = [
    "TableSpec",
    "table_spec",
    "calibrate_c0",
    "emit_table",
    "TABLE_IDS",
    "SENTINEL_TOKENS",
]

TABLE_IDS = ("t1", "t2", "t3a", "t3b", "t3c", "t4", "t5a", "t5b", "t5c", "t5d")

SENTINEL_TOKENS = {
    "no_tai_preferred": "NO_TAI_PREFERRED",  # published tables print "-"
    "tai_preferred": "TAI_PREFERRED",        # published tables print ">1"
    "no_solution": "NO_SOLUTION",
}

DEFAULT_ANCHOR = {"theta": 1.0, "g_ai": 0.05, "rho": 0.05}
DEFAULT_ANCHOR_TARGET = 0.055282

# fixed lottery/horizon constants per panel
_PANEL_FIXED = {
    "t3a": {"p4": 3e-5, "T": 50.0},
    "t3b": {"p3": 3e-5, "T": 50.0},
    "t3c": {"p3": 0.3, "p4": 0.3},
    "t5a": {"T": 100.0},
    "t5b": {"p3": 0.1},
    "t5c": {"p3": 0.1, "p4": 0.1, "T": 50.0},
    "t5d": {},
}

_THETA_DEFAULTS = {
    "t1": (1.0, 2.0),
    "t2": (1.0, 2.0),
    "t3a": (1.0, 2.0),
    "t3b": (1.0, 2.0),
    "t3c": (1.0, 2.0),
    "t4": (1.0001, 2.0),
    "t5a": (1.0,),
    "t5b": (1.0,),
    "t5c": (1.0,),
    "t5d": (1.0,),
}


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    g_ai_grid: tuple[float, ...] = DEFAULT_G_AI_GRID
    rho_grid: tuple[float, ...] = DEFAULT_RHO_GRID
    theta_set: tuple[float, ...] = (1.0, 2.0)
    fixed_params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.table_id not in TABLE_IDS:
            raise ConfigError(f"unknown table id {self.table_id!r}")
        for name in ("g_ai_grid", "rho_grid"):
            grid = getattr(self, name)
            if not grid:
                raise ConfigError(f"{name} must be nonempty")
            if any(b <= a for a, b in zip(grid, grid[1:])):
                raise ConfigError(f"{name} must be strictly increasing")


def table_spec(table_id: str, config: Optional[RunConfig] = None) -> TableSpec:
    """TableSpec for a table id, honouring grid/theta overrides in config."""
    config = config or RunConfig()
    if table_id not in TABLE_IDS:
        raise ConfigError(f"unknown table id {table_id!r}")
    theta_set = config.theta_set or _THETA_DEFAULTS[table_id]
    fixed = dict(_PANEL_FIXED.get(table_id, {}))
    return TableSpec(
        table_id=table_id,
        g_ai_grid=config.g_ai_grid,
        rho_grid=config.rho_grid,
        theta_set=tuple(theta_set),
        fixed_params=fixed,
    )


# ---------------------------------------------------------------------------
# calibration
# ---------------------------------------------------------------------------


def calibrate_c0(
    target: float = DEFAULT_ANCHOR_TARGET,
    *,
    g_ai: float = DEFAULT_ANCHOR["g_ai"],
    rho: float = DEFAULT_ANCHOR["rho"],
    g_baseline: float = 0.0175,
) -> float:
    """Baseline consumption c0 >= 1 making the anchor cell hit its target.

    The anchor identity is the theta = 1 immediate-misalignment threshold
    p3 = 1 - W0/W_cornucopia, linear in log c0, hence the closed form.  A
    target implying log c0 < 0 has no admissible calibration.
    """
    if not 0.0 < target < 1.0:
        raise DomainError(f"anchor target must lie in (0, 1), got {target!r}")
    if not g_ai > g_baseline:
        raise DomainError("anchor needs g_ai > g_baseline")
    log_c0 = ((1.0 - target) * g_ai - g_baseline) / (rho * target)
    if log_c0 < 0.0:
        raise DomainError(
            f"anchor target {target!r} implies c0 < 1; no admissible calibration"
        )
    return math.exp(log_c0)


# ---------------------------------------------------------------------------
# cell evaluation
# ---------------------------------------------------------------------------


def _scenario(config: RunConfig, theta: float, g_ai: float, rho: float) -> ScenarioSpec:
    return ScenarioSpec(
        c0=config.resolved_c0(),
        g_ai=g_ai,
        g_baseline=config.g_baseline,
        prefs=Preferences(rho=rho, theta_rra=theta),
    )


def solve_cell(
    table_id: str,
    config: RunConfig,
    theta: float,
    g_ai: float,
    rho: float,
    fixed: dict,
) -> SolveOutcome:
    """One grid cell of an indifference or EV table."""
    spec = _scenario(config, theta, g_ai, rho)
    if table_id == "t1":
        return solve_extinction_time(spec)
    if table_id == "t2":
        return solve_p3_immediate(spec)
    if table_id == "t3a":
        return solve_p3_delayed(spec, p4=fixed["p4"], T=fixed["T"])
    if table_id == "t3b":
        return solve_p4_delayed(spec, p3=fixed["p3"], T=fixed["T"])
    if table_id == "t3c":
        return solve_T_delayed(spec, p3=fixed["p3"], p4=fixed["p4"])
    if table_id == "t4":
        return solve_epsilon_mounting(spec, quad_tol=config.quad_tol)
    if table_id in ("t5a", "t5b", "t5c", "t5d"):
        return _ev_cell(table_id, spec, config, fixed)
    raise ConfigError(f"unknown table id {table_id!r}")


def _ev_cell(
    table_id: str, spec: ScenarioSpec, config: RunConfig, fixed: dict
) -> SolveOutcome:
    panel = table_id[-1]
    if panel == "d":
        # the hazard slope is re-solved in-pipeline at the log-like curvature
        eps_spec = _scenario(config, 1.0001, spec.g_ai, spec.prefs.rho)
        solved = solve_epsilon_mounting(eps_spec, quad_tol=config.quad_tol)
        if not solved.is_value:
            return solved
        result = ev_panel(spec, "d", epsilon=solved.value)
    elif panel == "a":
        result = ev_panel(spec, "a", T=fixed["T"])
    elif panel == "b":
        result = ev_panel(spec, "b", p3=fixed["p3"])
    else:
        result = ev_panel(spec, "c", p3=fixed["p3"], p4=fixed["p4"], T=fixed["T"])
    return SolveOutcome.of(result.ev)


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def format_cell(outcome: SolveOutcome) -> str:
    if outcome.is_value:
        return format_number(outcome.value)
    return SENTINEL_TOKENS[outcome.tag]


def format_number(x: float) -> str:
    """Six significant digits; scientific notation below 1e-3 in magnitude."""
    if x == 0.0:
        return "0"
    if abs(x) < 1e-3:
        return f"{x:.5e}"
    return f"{x:.6g}"


def emit_table(spec: TableSpec, config: Optional[RunConfig] = None) -> str:
    """Render one table as CSV or markdown text, deterministically.

    Cells are evaluated in a fixed row-major order; a solver error in one
    cell becomes an ERROR:<reason> token and the rest of the table proceeds.
    """
    config = config or RunConfig()
    header = ["g_ai"]
    for theta in spec.theta_set:
        for rho in spec.rho_grid:
            header.append(f"theta={format_number(theta)}/rho={format_number(rho)}")
    rows: list[list[str]] = []
    for g_ai in spec.g_ai_grid:
        row = [format_number(g_ai)]
        for theta in spec.theta_set:
            for rho in spec.rho_grid:
                try:
                    outcome = solve_cell(
                        spec.table_id, config, theta, g_ai, rho, spec.fixed_params
                    )
                    row.append(format_cell(outcome))
                except QuadratureError as exc:
                    row.append(f"ERROR:quadrature:{exc}")
                except TaiWelfareError as exc:
                    row.append(f"ERROR:{exc}")
        rows.append(row)
    if config.output_format == "markdown":
        return _render_markdown(header, rows)
    return _render_csv(header, rows)


def _render_csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _render_markdown(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"
