"""
Half-integer-β members of the I_{β,k} family, reduced to Legendre integrals.

Features
--------
* ``amplitude`` – ξ with sin ξ = τ/b, modulus k = b/a and characteristic b².
* ``d_seq`` – the ladder D_{2v} = a·b^(2v)·∫₀^τ (b²−t²)^(−v) dt/√((a²−t²)(b²−t²)),
  seeded by F and a cancellation-free D_2 and run upward. Negative v come
  from ``k_seq``; ``d_downward`` keeps the downward recurrence for checks.
* ``k_seq`` – K_j = ∫₀^τ (b²−t²)^(j−½)(a²−t²)^(−½) dt through the expansion of
  (a²−t²)^(−½) about a² − b² over the B ladder.
* ``a_seq`` – the products b^(2l)·A_{2l} (moments of t^(2l)), summed from
  regularized incomplete beta values; ``a_recurrence_residual`` checks them
  against the three-term recurrence in l.
* ``jbar_halfint`` (k ≥ 1), ``jbar_beta0`` (k = 0 through Π) and ``i_halfint``.
* ``jbar_recurrence_residual`` – the recurrence shared with the integer family.

Half-integer β are passed as ``two_beta`` (an odd integer).
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt
from numpy.lib.stride_tricks import sliding_window_view
from scipy import special

from geoline.elementary import b_seq, recurrence_residual
from geoline.elliptic import Amplitude
from geoline.errors import UnsupportedIndexError
from geoline.model import FamilyContext, tau_squared

logger = logging.getLogger(__name__)

# Expansion ratio (b²/(a²−b²)) above which K_j falls back to the downward recurrence
_SERIES_RATIO_MAX = 0.5
_SERIES_TERMS_MAX = 200
# Cap on the (t/a)² expansion behind the A ladder
_MOMENT_TERMS_MAX = 4000

# Per-evaluation store of H ladders keyed by (v_min, v_max, τ)
LadderMemo = dict[tuple[int, int, float], tuple[float, ...]]


def _half_index(two_beta: int) -> int:
    """n = β + ½ for an odd ``two_beta ≥ −1``."""
    if two_beta % 2 == 0 or two_beta < -1:
        raise UnsupportedIndexError(f"two_beta={two_beta} is not an odd integer >= -1")
    return (two_beta + 1) // 2


def amplitude(tau: float, ctx: FamilyContext) -> Amplitude:
    bp = ctx.bp
    tau_squared(tau, bp)
    rest = (bp.b - tau) * (bp.b + tau)
    return Amplitude.from_sine(tau / bp.b, rest / bp.b2, k=bp.modulus, n=bp.b2)


# D ladder


def _d_upward(top: int, tau: float, ctx: FamilyContext) -> tuple[npt.NDArray[np.float64], float]:
    """D_0..D_{2·top} (top ≥ 1) and the boundary factor a·τ·√(a²−τ²)/√(b²−τ²)."""
    out = np.zeros(top + 1)
    if tau == 0.0:
        return out, 0.0

    bp = ctx.bp
    amp = amplitude(tau, ctx)
    big = (bp.a - tau) * (bp.a + tau)
    small = (bp.b - tau) * (bp.b + tau)
    root = bp.a * tau * math.sqrt(big / small)

    f = amp.f()
    out[0] = f
    out[1] = (bp.a2 * amp.f_minus_e() - bp.b2 * f + root) / bp.a2_minus_b2

    mid = bp.a2_minus_b2 - bp.b2
    bnd = root
    for v in range(1, top):
        bnd *= bp.b2 / small
        out[v + 1] = (
            (2 * v - 1) * bp.b2 * out[v - 1] + 2 * v * mid * out[v] + bnd
        ) / ((2 * v + 1) * bp.a2_minus_b2)
    return out, root


def d_downward(v_min: int, tau: float, ctx: FamilyContext) -> npt.NDArray[np.float64]:
    """D_{2v} for v = v_min..0 by running the recurrence downward from D_0, D_2.

    Each step amplifies rounding by roughly a²/b²; kept for consistency checks
    and for strongly eccentric surfaces where ``k_seq`` does not converge.
    """
    if v_min > 0:
        raise UnsupportedIndexError(f"v_min={v_min} must be <= 0")
    bp = ctx.bp
    up, root = _d_upward(1, tau, ctx)
    vals = {0: up[0], 1: up[1]}
    if tau != 0.0:
        small = (bp.b - tau) * (bp.b + tau)
        mid = bp.a2_minus_b2 - bp.b2
        for v in range(0, v_min, -1):
            bnd = root * (bp.b2 / small) ** v
            vals[v - 1] = (
                (2 * v + 1) * bp.a2_minus_b2 * vals[v + 1] - 2 * v * mid * vals[v] - bnd
            ) / ((2 * v - 1) * bp.b2)
    else:
        for v in range(0, v_min, -1):
            vals[v - 1] = 0.0
    return np.array([vals[v] for v in range(v_min, 1)])


def k_seq(j_max: int, tau: float, ctx: FamilyContext) -> npt.NDArray[np.float64]:
    """K_j = ∫₀^τ (b²−t²)^(j−½)(a²−t²)^(−½) dt for j = 0..j_max (K_0 = F/a)."""
    bp = ctx.bp
    out = np.zeros(j_max + 1)
    if tau == 0.0:
        return out
    out[0] = amplitude(tau, ctx).f() / bp.a
    if j_max == 0:
        return out

    ratio = bp.b2 / bp.a2_minus_b2
    if ratio >= _SERIES_RATIO_MAX:
        logger.debug("K ladder by downward recurrence (ratio %.3g)", ratio)
        down = d_downward(-j_max, tau, ctx)
        for j in range(1, j_max + 1):
            out[j] = down[j_max - j] / (bp.a * bp.b2 ** (-j))
        return out

    # (a²−t²)^(−½) = (a²−b²)^(−½) Σ_r C(−½,r) ((b²−t²)/(a²−b²))^r
    terms = _SERIES_TERMS_MAX
    if ratio > 0.0:
        terms = min(_SERIES_TERMS_MAX, int(math.ceil(math.log(1.0e-17) / math.log(ratio))) + 2)
    ladder = b_seq(j_max + terms, bp.b, tau)
    weights = np.empty(terms + 1)
    weights[0] = 1.0
    for r in range(1, terms + 1):
        weights[r] = weights[r - 1] * (0.5 - r) / r / bp.a2_minus_b2
    for j in range(1, j_max + 1):
        out[j] = math.fsum(weights * ladder[j : j + terms + 1]) / math.sqrt(bp.a2_minus_b2)
    return out


def _h_values(
    v_min: int, v_max: int, tau: float, ctx: FamilyContext, memo: LadderMemo | None = None
) -> tuple[float, ...]:
    """H_v = ∫₀^τ (b²−t²)^(−v−½)(a²−t²)^(−½) dt for v = v_min..v_max."""
    key = (v_min, v_max, tau)
    if memo is not None and key in memo:
        return memo[key]
    bp = ctx.bp
    pos: npt.NDArray[np.float64] = np.zeros(1)
    if v_max >= 0:
        pos, _ = _d_upward(max(v_max, 1), tau, ctx)
    neg = k_seq(-v_min, tau, ctx) if v_min < 0 else np.zeros(1)
    values = tuple(
        float(pos[v]) / (bp.a * bp.b2**v) if v >= 0 else float(neg[-v])
        for v in range(v_min, v_max + 1)
    )
    if memo is not None:
        memo[key] = values
    return values


def d_seq(
    v_max: int, tau: float, ctx: FamilyContext, v_min: int = 0
) -> npt.NDArray[np.float64]:
    """D_{2v} for v = v_min..v_max (index 0 ↔ v_min)."""
    if v_max < v_min:
        raise UnsupportedIndexError(f"empty ladder v_min={v_min} > v_max={v_max}")
    bp = ctx.bp
    tau_squared(tau, bp)
    h = _h_values(v_min, v_max, tau, ctx)
    return np.array([bp.a * bp.b2**v * h[i] for i, v in enumerate(range(v_min, v_max + 1))])


# A ladder


def _sine_moments(m_max: int, tau: float, b: float) -> npt.NDArray[np.float64]:
    """M_m = ∫₀^τ t^(2m)/√(b²−t²) dt = ½·b^(2m)·B(m+½, ½)·I_{τ²/b²}(m+½, ½), τ ≥ 0."""
    m = np.arange(m_max + 1, dtype=np.float64)
    s2 = min((tau / b) ** 2, 1.0)
    scale = np.exp(2.0 * m * math.log(b) + special.betaln(m + 0.5, 0.5))
    return 0.5 * scale * special.betainc(m + 0.5, 0.5, s2)


def a_seq(l_max: int, tau: float, ctx: FamilyContext) -> npt.NDArray[np.float64]:
    """X_l = b^(2l)·A_{2l} = a·∫₀^τ t^(2l)/√((a²−t²)(b²−t²)) dt for l = 0..l_max.

    a/√(a²−t²) = Σ_j C(2j,j)/4^j·(t/a)^(2j), so X_l = Σ_j C(2j,j)/(4a²)^j·M_{l+j}
    with the positive moments of :func:`_sine_moments`; the terms fall at
    least as fast as (τ/a)^(2j) and nothing cancels.
    """
    bp = ctx.bp
    tau_squared(tau, bp)
    if tau == 0.0:
        return np.zeros(l_max + 1)

    t = abs(tau)
    q = (t / bp.a) ** 2
    terms = 1
    if q > 0.0:
        terms = min(_MOMENT_TERMS_MAX, int(math.ceil(math.log(1.0e-17) / math.log(q))) + 1)
    j = np.arange(1, terms + 1)
    weights = np.concatenate(([1.0], np.cumprod((2 * j - 1) / (2 * j) / bp.a2)))
    moments = _sine_moments(l_max + terms, t, bp.b)
    out: npt.NDArray[np.float64] = sliding_window_view(moments, terms + 1)[: l_max + 1] @ weights
    return math.copysign(1.0, tau) * out


def a_recurrence_residual(l_max: int, tau: float, ctx: FamilyContext) -> float:
    """Largest relative residual over l = 1..l_max−1 of

        (2l+1)·X_{l+1} = a·τ^(2l−1)·√((a²−τ²)(b²−τ²)) + 2l(a²+b²)·X_l − (2l−1)a²b²·X_{l−1}.
    """
    if l_max < 2:
        raise UnsupportedIndexError(f"recurrence needs l_max >= 2, got {l_max}")
    bp = ctx.bp
    ladder = a_seq(l_max, tau, ctx)
    root = bp.a * math.sqrt((bp.a - tau) * (bp.a + tau) * (bp.b - tau) * (bp.b + tau))
    worst = 0.0
    for l in range(1, l_max):
        terms = (
            (2 * l + 1) * ladder[l + 1],
            -root * tau ** (2 * l - 1),
            -2 * l * (bp.a2 + bp.b2) * ladder[l],
            (2 * l - 1) * bp.a2 * bp.b2 * ladder[l - 1],
        )
        scale = max(abs(x) for x in terms)
        if scale > 0.0:
            worst = max(worst, abs(math.fsum(terms)) / scale)
    return worst


# J̄ and I for half-integer β


def jbar_halfint(
    two_beta: int, k: int, tau: float, ctx: FamilyContext, memo: LadderMemo | None = None
) -> float:
    """J̄_{β,k}(τ) = 2∫₀^τ (1−t²)^(k−1)(a²−t²)^β/(b²−t²)^(k+½) dt for k ≥ 1."""
    n = _half_index(two_beta)
    if k < 1:
        raise UnsupportedIndexError(f"jbar_halfint needs k >= 1, got {k}")
    tau_squared(tau, ctx.bp)
    if tau == 0.0:
        return 0.0

    bp = ctx.bp
    v_min = 1 - n
    h = _h_values(v_min, k, tau, ctx, memo)
    total = 0.0
    for s in range(k):
        ws = math.comb(k - 1, s) * bp.one_minus_b2**s
        for m in range(n + 1):
            total += ws * math.comb(n, m) * bp.a2_minus_b2**m * h[1 + s + m - n - v_min]
    return 2.0 * total


def jbar_beta0(two_beta: int, tau: float, ctx: FamilyContext) -> float:
    """J̄_{β,0}(τ) = 2∫₀^τ (a²−t²)^β / ((1−t²)√(b²−t²)) dt."""
    n = _half_index(two_beta)
    tau_squared(tau, ctx.bp)
    if tau == 0.0:
        return 0.0

    bp = ctx.bp
    moments = [amplitude(tau, ctx).pi() / bp.a]
    if n >= 1:
        kk = k_seq(n - 1, tau, ctx)
        for m in range(1, n + 1):
            moments.append(
                math.fsum(
                    math.comb(m - 1, i) * bp.one_minus_b2 ** (m - 1 - i) * kk[i]
                    for i in range(m)
                )
            )
    total = math.fsum(
        math.comb(n, m) * bp.a2_minus_1 ** (n - m) * moments[m] for m in range(n + 1)
    )
    return 2.0 * total


def i_halfint(
    two_beta: int, k: int, tau: float, ctx: FamilyContext, memo: LadderMemo | None = None
) -> float:
    """I_{β,k}(τ) for half-integer β ≥ −½, definite from 0 and odd in τ.

    *memo* lets one series evaluation share the H ladders across (β, k).
    """
    if k < 0:
        raise UnsupportedIndexError(f"k={k} must be >= 0")
    pre = ctx.e**two_beta / ctx.bp.prefactor_base ** (k + 0.5)
    if k == 0:
        jbar = jbar_beta0(two_beta, tau, ctx)
    else:
        jbar = jbar_halfint(two_beta, k, tau, ctx, memo)
    return 0.5 * pre * jbar


def jbar_recurrence_residual(two_beta: int, k: int, tau: float, ctx: FamilyContext) -> float:
    """Relative residual of the partial-integration recurrence for β ≥ ½, k ≥ 1."""
    _half_index(two_beta)
    if two_beta < 1 or k < 1:
        raise UnsupportedIndexError(
            f"recurrence needs two_beta >= 1 and k >= 1, got ({two_beta}, {k})"
        )
    j_prev_k = jbar_halfint(two_beta, k - 1, tau, ctx) if k > 1 else 0.0
    return recurrence_residual(
        two_beta / 2.0,
        k,
        tau,
        ctx,
        jbar_halfint(two_beta, k, tau, ctx),
        j_prev_k,
        jbar_halfint(two_beta - 2, k, tau, ctx),
        jbar_halfint(two_beta, k + 1, tau, ctx),
    )
