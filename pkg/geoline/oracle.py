"""
Reference values by adaptive quadrature of the raw integrands.

The integrands are written in τ with the curvature radii spelled out
(``N = 1/√E`` prime vertical, ``M = (1 − e²)/E^(3/2)`` meridional, lengths in
units of ρ_e), so nothing here depends on the series reductions it checks.
Integration is delegated to QUADPACK through :func:`scipy.integrate.quad`.
"""

from __future__ import annotations

import math
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate

from geoline.errors import QuadratureError, SingularityError
from geoline.model import Ellipsoid, GeodesicSpec
from geoline.settings import Settings, get_settings


class Quadrature(BaseModel):
    """Tolerances and subdivision cap of one adaptive integration."""

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(1e-13, gt=0)
    rel_tol: float = Field(1e-12, gt=0)
    max_subdivisions: int = Field(200, ge=1)

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> Quadrature:
        settings = settings or get_settings()
        return cls(
            abs_tol=settings.quad_abs_tol,
            rel_tol=settings.quad_rel_tol,
            max_subdivisions=settings.quad_limit,
        )


def adaptive_quad(
    f: Callable[[float], float], lo: float, hi: float, q: Quadrature | None = None
) -> tuple[float, float]:
    """∫_lo^hi f and its error estimate; :class:`QuadratureError` when QUADPACK gives up."""
    q = q or Quadrature.from_settings()
    if lo == hi:
        return 0.0, 0.0
    out = integrate.quad(
        f,
        lo,
        hi,
        epsabs=q.abs_tol,
        epsrel=q.rel_tol,
        limit=q.max_subdivisions,
        full_output=1,
    )
    if len(out) > 3:
        raise QuadratureError(f"quadrature on [{lo!r}, {hi!r}] failed: {out[3]}")
    return float(out[0]), float(out[1])


# Curvature radii and the radicand


def prime_vertical(tau: float, e: float) -> float:
    return 1.0 / math.sqrt(1.0 - e * e * tau * tau)


def meridional(tau: float, e: float) -> float:
    big_e = 1.0 - e * e * tau * tau
    return (1.0 - e) * (1.0 + e) / big_e**1.5


def radicand(tau: float, e: float, h: float, c: float) -> float:
    """T − c²/(N + h)²; positive strictly inside the domain of the true integrands."""
    nh = prime_vertical(tau, e) + h
    return (1.0 - tau) * (1.0 + tau) - (c / nh) ** 2


def _check_limits(spec: GeodesicSpec, e: float) -> None:
    for tau in (spec.tau0, spec.tau1):
        if radicand(tau, e, spec.h, spec.c) <= 0.0:
            raise SingularityError(f"radicand vanishes at or before tau={tau!r}")


# Integrands


def longitude_integrand(tau: float, e: float, h: float, c: float) -> float:
    nh = prime_vertical(tau, e) + h
    t = (1.0 - tau) * (1.0 + tau)
    return c * (meridional(tau, e) + h) / (nh * nh * t * math.sqrt(radicand(tau, e, h, c)))


def distance_integrand(tau: float, e: float, h: float, c: float) -> float:
    return (meridional(tau, e) + h) / math.sqrt(radicand(tau, e, h, c))


def quad_longitude(
    ellipsoid: Ellipsoid, spec: GeodesicSpec, q: Quadrature | None = None
) -> float:
    """Δλ by direct quadrature."""
    _check_limits(spec, ellipsoid.e)
    value, _ = adaptive_quad(
        lambda t: longitude_integrand(t, ellipsoid.e, spec.h, spec.c), spec.tau0, spec.tau1, q
    )
    return value


def quad_distance(ellipsoid: Ellipsoid, spec: GeodesicSpec, q: Quadrature | None = None) -> float:
    """Scaled distance s by direct quadrature."""
    _check_limits(spec, ellipsoid.e)
    value, _ = adaptive_quad(
        lambda t: distance_integrand(t, ellipsoid.e, spec.h, spec.c), spec.tau0, spec.tau1, q
    )
    return value
