"""Run configuration and the line-oriented key=value config format.

Format: one `key=value` per line, `#` starts a comment, blank lines are
ignored.  List-valued keys take comma-separated numbers.  Unknown keys are
rejected with their line number; every value is range-checked on parse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConfigError

__all__ = ["RunConfig", "parse_config", "DEFAULT_G_AI_GRID", "DEFAULT_RHO_GRID"]

DEFAULT_G_AI_GRID = (0.05, 0.1, 0.2, 0.3, 0.4)
DEFAULT_RHO_GRID = (0.002, 0.01, 0.03, 0.05)


def _default_c0() -> float:
    from .tables import calibrate_c0

    return calibrate_c0()


@dataclass(frozen=True)
class RunConfig:
    """Inputs shared by the table pipeline and the CLI; fully deterministic.

    c0 defaults to the value calibrated from the standard anchor cell, see
    tables.calibrate_c0.
    """

    c0: Optional[float] = None  # None = calibrate on first use
    g_baseline: float = 0.0175
    g_ai_grid: tuple[float, ...] = DEFAULT_G_AI_GRID
    rho_grid: tuple[float, ...] = DEFAULT_RHO_GRID
    theta_set: Optional[tuple[float, ...]] = None  # None = per-table default
    p1: float = 0.9
    p2: float = 0.8
    p3: float = 0.3
    p4: float = 0.3
    T: float = 50.0
    epsilon: float = 1e-4
    saving_rate: float = 0.3
    delta: float = 0.05
    tech_growth: float = 0.0175
    output_format: str = "csv"
    quad_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.c0 is not None and not self.c0 >= 1.0:
            raise ConfigError(f"c0 must be >= 1, got {self.c0!r}")
        if self.g_baseline < 0.0:
            raise ConfigError(f"g_baseline must be >= 0, got {self.g_baseline!r}")
        for name in ("g_ai_grid", "rho_grid"):
            grid = getattr(self, name)
            if not grid:
                raise ConfigError(f"{name} must be nonempty")
            if any(b <= a for a, b in zip(grid, grid[1:])):
                raise ConfigError(f"{name} must be strictly increasing, got {grid!r}")
        for name in ("p1", "p2", "p3", "p4"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {v!r}")
        if self.T < 0.0:
            raise ConfigError(f"T must be >= 0, got {self.T!r}")
        if self.epsilon < 0.0:
            raise ConfigError(f"epsilon must be >= 0, got {self.epsilon!r}")
        if not 0.0 <= self.saving_rate < 1.0:
            raise ConfigError(
                f"saving_rate must lie in [0, 1), got {self.saving_rate!r}"
            )
        if self.delta < 0.0:
            raise ConfigError(f"delta must be >= 0, got {self.delta!r}")
        if self.tech_growth < 0.0:
            raise ConfigError(f"tech_growth must be >= 0, got {self.tech_growth!r}")
        if self.output_format not in ("csv", "markdown"):
            raise ConfigError(
                f"output_format must be csv or markdown, got {self.output_format!r}"
            )
        if not self.quad_tol > 0.0:
            raise ConfigError(f"quad_tol must be > 0, got {self.quad_tol!r}")

    def resolved_c0(self) -> float:
        return _default_c0() if self.c0 is None else self.c0


_SCALAR_KEYS = {
    "c0": "c0",
    "g_baseline": "g_baseline",
    "p1": "p1",
    "p2": "p2",
    "p3": "p3",
    "p4": "p4",
    "T": "T",
    "epsilon": "epsilon",
    "saving_rate": "saving_rate",
    "delta": "delta",
    "tech_growth": "tech_growth",
    "quad_tol": "quad_tol",
}
_LIST_KEYS = {"g_ai_grid", "rho_grid", "theta_set"}


def _parse_float(raw: str, key: str, line_no: int) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(
            f"line {line_no}: value for {key} is not a number: {raw!r}"
        ) from None


def parse_config(text: str) -> RunConfig:
    """Parse config text into a RunConfig; raises ConfigError with line info."""
    updates: dict = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected key=value, got {raw_line!r}")
        key, _, raw_value = line.partition("=")
        key = key.strip()
        raw_value = raw_value.strip()
        if key in _SCALAR_KEYS:
            updates[_SCALAR_KEYS[key]] = _parse_float(raw_value, key, line_no)
        elif key in _LIST_KEYS:
            parts = [p for p in raw_value.split(",") if p.strip()]
            if not parts:
                raise ConfigError(f"line {line_no}: {key} needs at least one value")
            updates[key] = tuple(_parse_float(p.strip(), key, line_no) for p in parts)
        elif key == "output_format":
            updates["output_format"] = raw_value
        else:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
    try:
        return RunConfig(**updates)
    except ConfigError:
        raise
