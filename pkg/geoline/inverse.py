"""
Recover the obliquity parameter c from a longitude difference.

The longitude series is increasing in c for fixed limits, so c is bracketed
by ``[0, c_upper]`` where ``c_upper`` is the largest c whose branch point
still clears the latitude limits by the configured margin. The root is found
by Newton steps on the analytic derivative, falling back to bisection when a
step would leave the bracket or fails to halve the residual.
"""

from __future__ import annotations

import logging
import math
import sys
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field

from geoline.errors import ConvergenceError, DomainError, NoBracketError
from geoline.model import Ellipsoid, GeodesicSpec
from geoline.series import longitude_and_derivative, longitude_integral
from geoline.settings import Settings, get_settings

logger = logging.getLogger(__name__)

# Relative shrink of c_upper so the bracket end stays strictly inside the domain
_UPPER_SHRINK = 1.0e-9
_DX_FLOOR = 4.0 * sys.float_info.epsilon


class InverseProblem(BaseModel):
    """Target Δλ between two latitude limits at altitude h."""

    model_config = ConfigDict(frozen=True)

    target_dlambda: float
    tau0: float = Field(0.0, gt=-1, lt=1)
    tau1: float = Field(..., gt=-1, lt=1)
    h: float = Field(0.0, ge=0)
    order: int = Field(8, ge=0)
    tolerance: float | None = Field(None, gt=0)
    max_iter: int | None = Field(None, ge=1)


class InverseSolution(NamedTuple):
    c: float
    iterations: int
    residual: float


def c_upper(tau_max: float, e: float, margin: float) -> float:
    """Largest c with b(c)·(1 − margin) ≥ tau_max, from b² = (1 − c²)/(1 − c²e²)."""
    q = tau_max / (1.0 - margin)
    if q >= 1.0:
        raise DomainError(f"max|tau|={tau_max!r} leaves no admissible c for margin={margin!r}")
    c2 = (1.0 - q) * (1.0 + q) / (1.0 - q * q * e * e)
    return math.sqrt(c2) * (1.0 - _UPPER_SHRINK)


def _spec(problem: InverseProblem, c: float) -> GeodesicSpec:
    return GeodesicSpec(
        h=problem.h, c=c, tau0=problem.tau0, tau1=problem.tau1, order=problem.order
    )


def solve_c(
    problem: InverseProblem, ellipsoid: Ellipsoid, settings: Settings | None = None
) -> InverseSolution:
    """Safeguarded Newton iteration for c with |Δλ(c) − target| ≤ tolerance."""
    settings = settings or get_settings()
    tol = problem.tolerance or settings.newton_tol
    max_iter = problem.max_iter or settings.newton_max_iter
    target = problem.target_dlambda

    if target == 0.0:
        return InverseSolution(c=0.0, iterations=0, residual=0.0)

    tau_max = max(abs(problem.tau0), abs(problem.tau1))
    hi = c_upper(tau_max, ellipsoid.e, settings.margin)
    top = longitude_integral(ellipsoid, _spec(problem, hi), settings).value
    if top == 0.0 or not 0.0 < target / top <= 1.0:
        raise NoBracketError(
            f"no bracket: target {target!r} outside (0, {top!r}] reached at c_upper={hi!r}"
        )
    sign = math.copysign(1.0, top)

    # Sampled monotonicity of Δλ on the bracket
    previous = 0.0
    for i in range(1, settings.monotone_samples + 1):
        value = sign * longitude_integral(
            ellipsoid, _spec(problem, hi * i / settings.monotone_samples), settings
        ).value
        if value <= previous:
            raise NoBracketError(f"no bracket: delta_lambda not monotone in c on [0, {hi!r}]")
        previous = value

    xlo, xhi = 0.0, hi
    x = min(max(hi * target / top, 0.0), hi)
    dxold = dx = hi
    for it in range(1, max_iter + 1):
        value_r, slope_r = longitude_and_derivative(ellipsoid, _spec(problem, x), settings)
        f = sign * (value_r.value - target)
        df = sign * slope_r.value
        logger.debug("newton it=%d c=%.17g residual=%.3g", it, x, f)

        if abs(f) <= tol or abs(dx) <= _DX_FLOOR * abs(x):
            return InverseSolution(c=x, iterations=it, residual=f)

        if f < 0.0:
            xlo = x
        else:
            xhi = x

        if ((x - xhi) * df - f) * ((x - xlo) * df - f) >= 0.0 or abs(2.0 * f) > abs(
            dxold * df
        ):
            dxold = dx
            dx = 0.5 * (xhi - xlo)
            x = xlo + dx
        else:
            dxold = dx
            dx = f / df
            x -= dx

    raise ConvergenceError(f"c not converged after {max_iter} iterations (last c={x!r})")
