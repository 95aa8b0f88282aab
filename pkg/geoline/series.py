"""
Altitude power series for the longitude difference, the distance and ∂Δλ/∂c.

Features
--------
* ``i_beta_k`` – dispatches one I_{β,k}(τ) to the elementary family (integer
  β ≥ 0), the elliptic family (half-integer β ≥ −½) or the three closed forms
  with β < −½.
* ``i_alpha_series`` / ``s_alpha_series`` – the per-order series of the
  longitude and distance integrands.
* ``longitude_integral``, ``distance_integral``, ``di_dc`` and
  ``longitude_and_derivative`` – the assembled quantities.
* ``profile_rows`` – I_{β,k}(τ) sampled on a τ grid per (c, k) for plotting.

Indices β and α are carried as ``two_beta`` / ``two_alpha`` integers. Every
member is evaluated as value(τ1) − value(τ0) and memoised for the duration of
one evaluation, since the series share members across orders.
"""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Callable, Iterator, Sequence
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from geoline.elementary import i_int
from geoline.elliptic_family import LadderMemo, i_halfint
from geoline.errors import DomainError, SeriesConvergenceWarning, UnsupportedIndexError
from geoline.kappa import kappa_array, s_coefficient_array
from geoline.model import Ellipsoid, FamilyContext, GeodesicSpec, require_domain
from geoline.settings import Settings, get_settings
from geoline.special import i_m1_0, i_m1_1, i_m32_0

logger = logging.getLogger(__name__)

# Closed forms for the members below β = −½, keyed by (2β, k)
_SPECIAL: dict[tuple[int, int], Callable[[float, FamilyContext], float]] = {
    (-3, 0): i_m32_0,
    (-2, 0): i_m1_0,
    (-2, 1): i_m1_1,
}

# 2α of the four distance groups
_DISTANCE_ALPHAS = frozenset({0, 1, -3, -2})


class IntegralResult(BaseModel):
    """Value of a series together with its per-order contributions."""

    model_config = ConfigDict(frozen=True)

    value: float
    terms: tuple[float, ...]
    trunc_estimate: float
    orders_used: int

    @classmethod
    def from_terms(cls, terms: list[float]) -> IntegralResult:
        return cls(
            value=math.fsum(terms),
            terms=tuple(terms),
            trunc_estimate=abs(terms[-1]),
            orders_used=len(terms) - 1,
        )

    def scaled(self, factor: float) -> IntegralResult:
        return IntegralResult.from_terms([factor * t for t in self.terms])


# Dispatch


def i_beta_k(
    two_beta: int, k: int, tau: float, ctx: FamilyContext, memo: LadderMemo | None = None
) -> float:
    """I_{β,k}(τ), definite from 0, for β = two_beta/2."""
    if k < 0:
        raise UnsupportedIndexError(f"k={k} must be >= 0")
    if two_beta >= 0 and two_beta % 2 == 0:
        return i_int(two_beta // 2, k, tau, ctx)
    if two_beta >= -1 and two_beta % 2 == 1:
        return i_halfint(two_beta, k, tau, ctx, memo)
    special = _SPECIAL.get((two_beta, k))
    if special is None:
        raise UnsupportedIndexError(f"no reduction for beta={two_beta / 2}, k={k}")
    return special(tau, ctx)


class SeriesEvaluator:
    """Endpoint-differenced I_{β,k} values memoised for one evaluation."""

    def __init__(self, ctx: FamilyContext, tau0: float, tau1: float) -> None:
        self.ctx = ctx
        self.tau0 = tau0
        self.tau1 = tau1
        self._cache: dict[tuple[int, int], float] = {}
        self._ladders: LadderMemo = {}

    def _at(self, two_beta: int, k: int, tau: float) -> float:
        return 0.0 if tau == 0.0 else i_beta_k(two_beta, k, tau, self.ctx, self._ladders)

    def delta(self, two_beta: int, k: int) -> float:
        key = (two_beta, k)
        if key not in self._cache:
            if self.tau0 == self.tau1:
                self._cache[key] = 0.0
            else:
                self._cache[key] = self._at(two_beta, k, self.tau1) - self._at(
                    two_beta, k, self.tau0
                )
        return self._cache[key]

    def __len__(self) -> int:
        return len(self._cache)


# Per-order term lists


def _effective_order(spec: GeodesicSpec) -> int:
    return spec.order if spec.h > 0.0 else 0


def _i_alpha_terms(two_alpha: int, h: float, order: int, ev: SeriesEvaluator) -> list[float]:
    kap = kappa_array(order)
    out = []
    for s in range(order + 1):
        acc = math.fsum(kap[s, k] * ev.delta(two_alpha + s, k) for k in range(s + 1))
        out.append((-h) ** s * acc)
    return out


def _p_alpha_terms(two_alpha: int, h: float, order: int, ev: SeriesEvaluator) -> list[float]:
    # c·∂I_{β,k}/∂c = (2k+1)(I_{β,k+1} − I_{β,k})
    kap = kappa_array(order)
    out = []
    for s in range(order + 1):
        tb = two_alpha + s
        acc = math.fsum(
            (2 * k + 1) * kap[s, k] * (ev.delta(tb, k + 1) - ev.delta(tb, k))
            for k in range(s + 1)
        )
        out.append((-h) ** s * acc)
    return out


def _s_alpha_terms(two_alpha: int, h: float, order: int, ev: SeriesEvaluator) -> list[float]:
    # T = (1 − a²) + a²E distributes the extra factor T over I_{β,k} and I_{β+1,k}
    a2 = ev.ctx.bp.a2
    low = -ev.ctx.bp.a2_minus_1
    coef = s_coefficient_array(order)
    out = []
    for s in range(order + 1):
        tb = two_alpha + s
        acc = math.fsum(
            coef[s, k] * (low * ev.delta(tb, k) + a2 * ev.delta(tb + 2, k))
            for k in range((s + 1) // 2, s + 1)
        )
        out.append(h**s * acc)
    return out


def _checked(name: str, terms: list[float], settings: Settings) -> IntegralResult:
    result = IntegralResult.from_terms(terms)
    if len(terms) > 1 and terms[0] != 0.0:
        ratio = abs(terms[-1] / terms[0])
        logger.debug("%s: %d orders, last/first = %.3g", name, len(terms), ratio)
        if ratio > settings.warn_ratio:
            warnings.warn(
                f"{name}: last order is {ratio:.3g} of the leading term "
                f"(warn_ratio={settings.warn_ratio})",
                SeriesConvergenceWarning,
                stacklevel=3,
            )
    return result


# Series of one group


def _require_group_domain(spec: GeodesicSpec, ctx: FamilyContext, settings: Settings) -> None:
    if spec.c != ctx.c:
        raise DomainError(f"spec c={spec.c!r} does not match the context c={ctx.c!r}")
    require_domain(spec, ctx.e, settings.margin, settings.h_max)


def i_alpha_series(
    two_alpha: int,
    spec: GeodesicSpec,
    ctx: FamilyContext,
    settings: Settings | None = None,
) -> IntegralResult:
    """I_α = Σ_s (−h)^s Σ_k κ_{s,k} I_{α+s/2,k} between the limits of *spec*."""
    settings = settings or get_settings()
    _require_group_domain(spec, ctx, settings)
    ev = SeriesEvaluator(ctx, spec.tau0, spec.tau1)
    terms = _i_alpha_terms(two_alpha, spec.h, _effective_order(spec), ev)
    return _checked(f"I[{two_alpha}/2]", terms, settings)


def s_alpha_series(
    two_alpha: int,
    spec: GeodesicSpec,
    ctx: FamilyContext,
    settings: Settings | None = None,
) -> IntegralResult:
    """S_α = Σ_s h^s Σ_{k≥s/2} C(−½,k)C(k,s−k)2^(2k−s)·[(1−a²)I_{β,k} + a²I_{β+1,k}]."""
    if two_alpha not in _DISTANCE_ALPHAS:
        raise UnsupportedIndexError(f"S series undefined for alpha={two_alpha / 2}")
    settings = settings or get_settings()
    _require_group_domain(spec, ctx, settings)
    ev = SeriesEvaluator(ctx, spec.tau0, spec.tau1)
    terms = _s_alpha_terms(two_alpha, spec.h, _effective_order(spec), ev)
    return _checked(f"S[{two_alpha}/2]", terms, settings)


# Assembled quantities


def _context(ellipsoid: Ellipsoid, spec: GeodesicSpec, settings: Settings) -> FamilyContext:
    return require_domain(spec, ellipsoid.e, settings.margin, settings.h_max)


def _longitude_terms(spec: GeodesicSpec, e: float, ev: SeriesEvaluator) -> list[float]:
    order = _effective_order(spec)
    flat = _i_alpha_terms(-1, spec.h, order, ev)
    lifted = _i_alpha_terms(2, spec.h, order, ev)
    one_minus_e2 = (1.0 - e) * (1.0 + e)
    return [spec.c * (one_minus_e2 * f + spec.h * g) for f, g in zip(flat, lifted)]


def _derivative_terms(spec: GeodesicSpec, e: float, ev: SeriesEvaluator) -> list[float]:
    order = _effective_order(spec)
    one_minus_e2 = (1.0 - e) * (1.0 + e)
    flat = _i_alpha_terms(-1, spec.h, order, ev)
    lifted = _i_alpha_terms(2, spec.h, order, ev)
    q = [one_minus_e2 * f + spec.h * g for f, g in zip(flat, lifted)]
    p_flat = _p_alpha_terms(-1, spec.h, order, ev)
    p_lifted = _p_alpha_terms(2, spec.h, order, ev)
    return [qs + spec.h * pl + one_minus_e2 * pf for qs, pf, pl in zip(q, p_flat, p_lifted)]


def longitude_integral(
    ellipsoid: Ellipsoid, spec: GeodesicSpec, settings: Settings | None = None
) -> IntegralResult:
    """Δλ = c·[h·I_1 + (1 − e²)·I_{−½}] in radians."""
    settings = settings or get_settings()
    ev = SeriesEvaluator(_context(ellipsoid, spec, settings), spec.tau0, spec.tau1)
    return _checked("delta_lambda", _longitude_terms(spec, ellipsoid.e, ev), settings)


def distance_integral(
    ellipsoid: Ellipsoid, spec: GeodesicSpec, settings: Settings | None = None
) -> IntegralResult:
    """s = h·S_0 + h²·S_½ + (1−e²)·S_{−3/2} + h(1−e²)·S_{−1}, scaled by ρ_e."""
    settings = settings or get_settings()
    ev = SeriesEvaluator(_context(ellipsoid, spec, settings), spec.tau0, spec.tau1)
    order = _effective_order(spec)
    h = spec.h
    one_minus_e2 = (1.0 - ellipsoid.e) * (1.0 + ellipsoid.e)

    surface = _s_alpha_terms(-3, h, order, ev)
    mixed = _s_alpha_terms(-2, h, order, ev)
    flat = _s_alpha_terms(0, h, order, ev)
    lifted = _s_alpha_terms(1, h, order, ev)
    terms = [
        one_minus_e2 * s3 + h * (f0 + one_minus_e2 * m1) + h * h * l1
        for s3, m1, f0, l1 in zip(surface, mixed, flat, lifted)
    ]
    return _checked("distance", terms, settings)


def di_dc(
    ellipsoid: Ellipsoid, spec: GeodesicSpec, settings: Settings | None = None
) -> IntegralResult:
    """∂Δλ/∂c at fixed h and latitude limits; regular at c = 0."""
    settings = settings or get_settings()
    ev = SeriesEvaluator(_context(ellipsoid, spec, settings), spec.tau0, spec.tau1)
    return IntegralResult.from_terms(_derivative_terms(spec, ellipsoid.e, ev))


def longitude_and_derivative(
    ellipsoid: Ellipsoid, spec: GeodesicSpec, settings: Settings | None = None
) -> tuple[IntegralResult, IntegralResult]:
    """Δλ and ∂Δλ/∂c from one shared member cache."""
    settings = settings or get_settings()
    ev = SeriesEvaluator(_context(ellipsoid, spec, settings), spec.tau0, spec.tau1)
    value = IntegralResult.from_terms(_longitude_terms(spec, ellipsoid.e, ev))
    slope = IntegralResult.from_terms(_derivative_terms(spec, ellipsoid.e, ev))
    logger.debug("longitude_and_derivative: %d cached members", len(ev))
    return value, slope


# Profile data


class ProfileRow(NamedTuple):
    c: float
    k: int
    tau: float
    value: float


def profile_rows(
    e: float,
    c_values: Sequence[float],
    k_values: Sequence[int],
    two_beta: int = -1,
    tau_steps: int = 50,
    settings: Settings | None = None,
) -> Iterator[ProfileRow]:
    """I_{β,k}(τ) from τ = 0 on an even grid up to b(c)·(1 − margin), per (c, k)."""
    settings = settings or get_settings()
    if tau_steps < 1:
        raise UnsupportedIndexError(f"tau_steps={tau_steps} must be >= 1")
    for c in c_values:
        ctx = FamilyContext.of(e, c)
        memo: LadderMemo = {}
        top = ctx.bp.b * (1.0 - settings.margin)
        taus = np.linspace(0.0, top, tau_steps) if tau_steps > 1 else np.zeros(1)
        for k in k_values:
            for tau in taus:
                t = float(tau)
                yield ProfileRow(c=c, k=k, tau=t, value=i_beta_k(two_beta, k, t, ctx, memo))
