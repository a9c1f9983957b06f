"""Bracketed scalar root finding: geometric bracket expansion plus Brent.

Every indifference condition in this package is monotone in the solved
parameter, so a sign-change bracket both exists and pins a unique root
whenever there is one.  The solvers below therefore never need derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, ConvergenceError, DomainError

__all__ = ["RootResult", "expand_bracket", "brent"]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class RootResult:
    root: float
    iterations: int
    residual: float


def expand_bracket(
    f: Callable[[float], float],
    guess: float,
    lo_limit: float,
    hi_limit: float,
    *,
    factor: float = 2.0,
    max_steps: int = 200,
) -> tuple[float, float, float, float]:
    """Grow [a, b] geometrically around guess until f changes sign.

    Expansion is clipped to [lo_limit, hi_limit]; returns (a, b, f(a), f(b)).
    Raises BracketError when the limits are reached without a sign change.
    """
    if not lo_limit <= guess <= hi_limit:
        guess = min(max(guess, lo_limit), hi_limit)
    if factor <= 1.0:
        raise DomainError(f"expansion factor must exceed 1, got {factor!r}")
    a = b = guess
    fa = fb = f(guess)
    if fa == 0.0:
        return a, b, fa, fb
    step = abs(guess) * 0.5 or 0.5
    for _ in range(max_steps):
        moved = False
        if a > lo_limit:
            a = max(a - step, lo_limit)
            fa = f(a)
            moved = True
            if fa == 0.0 or fa * fb < 0.0:
                return a, b, fa, fb
        if b < hi_limit:
            b = min(b + step, hi_limit)
            fb = f(b)
            moved = True
            if fb == 0.0 or fa * fb < 0.0:
                return a, b, fa, fb
        if not moved:
            break
        step *= factor
    raise BracketError(
        f"no sign change in [{a!r}, {b!r}] (f(a)={fa!r}, f(b)={fb!r})"
    )


def brent(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    fa: float | None = None,
    fb: float | None = None,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_iterations: int = 200,
) -> RootResult:
    """Brent's method on a sign-change interval [a, b].

    Inverse-quadratic / secant steps with a bisection fallback; converges to
    |interval| <= 2 eps |root| + tolerance.  Raises ConvergenceError if the
    iteration cap is hit first (which a genuine bracket never does).
    """
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    if fa == 0.0:
        return RootResult(a, 0, 0.0)
    if fb == 0.0:
        return RootResult(b, 0, 0.0)
    if fa * fb > 0.0:
        raise DomainError(f"f(a) and f(b) must differ in sign, got {fa!r}, {fb!r}")
    c, fc = a, fa
    d = e = b - a
    for iteration in range(1, max_iterations + 1):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol = 2.0 * _EPS * abs(b) + max(abs_tol, rel_tol * abs(b))
        mid = 0.5 * (c - b)
        if abs(mid) <= tol or fb == 0.0:
            return RootResult(b, iteration, abs(fb))
        if abs(e) < tol or abs(fa) <= abs(fb):
            d = e = mid
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * mid * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * mid * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            s, e = e, d
            if 2.0 * p < 3.0 * mid * q - abs(tol * q) and p < abs(0.5 * s * q):
                d = p / q
            else:
                d = e = mid
        a, fa = b, fb
        if abs(d) > tol:
            b += d
        else:
            b += math.copysign(tol, mid)
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
    raise ConvergenceError(f"Brent failed to converge in {max_iterations} iterations")
