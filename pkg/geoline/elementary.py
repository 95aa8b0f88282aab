"""
Integer-β members of the I_{β,k} family, reduced to elementary functions.

Features
--------
* The z-power antiderivatives of ``z^t/√(C·z − 1)`` for every integer ``t``
  (``antider_zpow``), plus the reduction formula for ``t < 0``
  (``antider_zpow_recurrence``) as an independent check.
* ``j_int`` – J_{β,k}(τ²) by binomial expansion after ``z = 1/(b² − x)``;
  ``j0k`` – the single-sum special case β = 0.
* ``b_seq`` / ``i_beta0_int`` – the k = 0 member through the B_i ladder.
* ``i_int`` – the prefactored, signed I_{β,k}(τ).
* ``j_recurrence_residual`` – the partial-integration recurrence linking
  J_{β,k} to J_{β,k±1} and J_{β−1,k}.

All members are definite integrals from 0 and odd in τ.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from geoline.errors import DomainError, UnsupportedIndexError
from geoline.model import FamilyContext, tau_squared

# Switch to the series of arctan(x√u)/√u below this value of u·x²
_ATAN_SERIES_SWITCH = 1.0e-10


# Small helpers


def atan_root(tau: float, u: float, rest: float) -> float:
    """arctan(τ·√(u/rest))/√u with its u → 0 limit τ/√rest."""
    x = tau / math.sqrt(rest)
    y2 = u * x * x
    if y2 < _ATAN_SERIES_SWITCH:
        return x * (1.0 - y2 / 3.0)
    return math.atan(tau * math.sqrt(u / rest)) / math.sqrt(u)


def _x_of(tau: float, ctx: FamilyContext) -> float:
    return tau_squared(tau, ctx.bp)


# z-power antiderivatives


def _antider_w(t_exp: int, coef: float, w: float) -> float:
    """Primitive of z^t/√(coef·z − 1) written through w = coef·z − 1 ≥ 0."""
    rw = math.sqrt(w)
    if t_exp >= 0:
        acc = sum(math.comb(t_exp, l) * w**l / (2 * l + 1) for l in range(t_exp + 1))
        return 2.0 * rw / coef ** (t_exp + 1) * acc

    tp = -t_exp - 1
    cz = 1.0 + w
    acc = sum(
        math.gamma(l + 1) / math.gamma(l + 1.5) / cz ** (l + 1) for l in range(tp)
    )
    lead = coef**tp * math.gamma(tp + 0.5) / math.gamma(tp + 1)
    return lead * (rw * acc + 2.0 / math.sqrt(math.pi) * math.atan(rw))


def antider_zpow(t_exp: int, coef: float, z: float) -> float:
    """Antiderivative of z^t/√(coef·z − 1), normalised to vanish at coef·z = 1."""
    w = coef * z - 1.0
    if w < 0.0:
        raise DomainError(f"coef*z = {coef * z!r} < 1")
    return _antider_w(t_exp, coef, w)


def antider_zpow_recurrence(t_exp: int, coef: float, z: float) -> float:
    """Negative powers by (n−1)R_n = √w/z^(n−1) + coef(n − 3/2)R_{n−1}, R_1 = 2 arctan √w."""
    if t_exp >= 0:
        raise UnsupportedIndexError(f"recurrence covers negative powers only, got {t_exp}")
    w = coef * z - 1.0
    if w < 0.0:
        raise DomainError(f"coef*z = {coef * z!r} < 1")
    rw = math.sqrt(w)
    r = 2.0 * math.atan(rw)
    for n in range(2, -t_exp + 1):
        r = (rw / z ** (n - 1) + coef * (n - 1.5) * r) / (n - 1)
    return r


# J_{β,k} for integer β


def j_int(beta: int, k: int, tau: float, ctx: FamilyContext) -> float:
    """J_{β,k}(τ²) = ∫₀^{τ²} (1−x)^(k−1)(a²−x)^β / (√x (b²−x)^(k+½)) dx."""
    if beta < 0 or k < 1:
        raise UnsupportedIndexError(f"j_int needs beta >= 0 and k >= 1, got ({beta}, {k})")
    x = _x_of(tau, ctx)
    if x == 0.0:
        return 0.0

    bp = ctx.bp
    w = x / (bp.b2 - x)
    table = {t: _antider_w(t, bp.b2, w) for t in range(-beta, k)}
    total = 0.0
    for s in range(k):
        ws = math.comb(k - 1, s) * bp.one_minus_b2**s
        for m in range(beta + 1):
            total += ws * math.comb(beta, m) * bp.a2_minus_b2**m * table[s + m - beta]
    return total


def j0k(k: int, x: float, ctx: FamilyContext) -> float:
    """J_{0,k}(x) = 2√w/b^(2k) Σ_l C(k−1,l)(1−b²)^l w^l/(2l+1), w = x/(b²−x)."""
    if k < 1:
        raise UnsupportedIndexError(f"j0k needs k >= 1, got {k}")
    bp = ctx.bp
    if not 0.0 <= x < bp.b2:
        raise DomainError(f"x={x!r} outside [0, b^2={bp.b2!r})")
    w = x / (bp.b2 - x)
    acc = sum(
        math.comb(k - 1, l) * (bp.one_minus_b2 * w) ** l / (2 * l + 1) for l in range(k)
    )
    return 2.0 * math.sqrt(w) / bp.b2**k * acc


# k = 0 through the B ladder


def b_seq(i_max: int, b: float, tau: float) -> npt.NDArray[np.float64]:
    """B_i = ∫₀^τ (b² − t²)^(i−½) dt for i = 0..i_max."""
    if abs(tau) > b:
        raise DomainError(f"|tau|={abs(tau)!r} exceeds b={b!r}")
    out = np.empty(i_max + 1)
    rest = (b - tau) * (b + tau)
    out[0] = math.asin(tau / b)
    for i in range(1, i_max + 1):
        out[i] = tau / (2 * i) * rest ** (i - 0.5) + (1.0 - 1.0 / (2 * i)) * b * b * out[i - 1]
    return out


def i_beta0_int(beta: int, tau: float, ctx: FamilyContext) -> float:
    """I_{β,0}(τ) = e^(2β)/√(1−c²e²) ∫₀^τ (a²−t²)^β / ((1−t²)√(b²−t²)) dt."""
    if beta < 0:
        raise UnsupportedIndexError(f"i_beta0_int needs beta >= 0, got {beta}")
    _x_of(tau, ctx)
    bp = ctx.bp
    e2 = ctx.e * ctx.e
    rest = (bp.b - tau) * (bp.b + tau)

    # L_0 = ∫ dt/((1−t²)√(b²−t²)); L_l = Σ_i C(l−1,i)(1−b²)^(l−1−i) B_i
    ladder = b_seq(max(beta - 1, 0), bp.b, tau)
    total = (1.0 - e2) ** beta * atan_root(tau, bp.one_minus_b2, rest)
    for l in range(1, beta + 1):
        ll = sum(
            math.comb(l - 1, i) * bp.one_minus_b2 ** (l - 1 - i) * ladder[i] for i in range(l)
        )
        total += math.comb(beta, l) * (1.0 - e2) ** (beta - l) * e2**l * ll
    return total / math.sqrt(bp.prefactor_base)


def i_int(beta: int, k: int, tau: float, ctx: FamilyContext) -> float:
    """I_{β,k}(τ) for integer β ≥ 0, definite from 0 and odd in τ."""
    if k == 0:
        return i_beta0_int(beta, tau, ctx)
    pre = ctx.e ** (2 * beta) / ctx.bp.prefactor_base ** (k + 0.5)
    return math.copysign(0.5 * pre * j_int(beta, k, tau, ctx), tau)


# Consistency


def recurrence_residual(
    beta: float,
    k: int,
    tau: float,
    ctx: FamilyContext,
    j_same: float,
    j_prev_k: float,
    j_prev_beta: float,
    j_next_k: float,
) -> float:
    """Relative residual of the partial-integration recurrence.

    With g the J_{β,k} integrand, d/dx[x·g] integrated from 0 gives, after
    multiplying by (1 − b²),

        (1−b²)·x·g(x) = [(β−1)(1−b²) − (k−1) − (k+½)b²] J_{β,k}
                        + (k−1) J_{β,k−1} − β a²(1−b²) J_{β−1,k}
                        + (k+½) b² J_{β,k+1}.
    """
    bp = ctx.bp
    x = _x_of(tau, ctx)
    gap = bp.one_minus_b2
    boundary = gap * math.sqrt(x) * (1.0 - x) ** (k - 1) * (bp.a2 - x) ** beta / (
        bp.b2 - x
    ) ** (k + 0.5)
    terms = (
        ((beta - 1.0) * gap - (k - 1) - (k + 0.5) * bp.b2) * j_same,
        (k - 1) * j_prev_k,
        -beta * bp.a2 * gap * j_prev_beta,
        (k + 0.5) * bp.b2 * j_next_k,
        -boundary,
    )
    scale = max(abs(t) for t in terms)
    return abs(math.fsum(terms)) / scale if scale > 0.0 else 0.0


def j_recurrence_residual(beta: int, k: int, tau: float, ctx: FamilyContext) -> float:
    """Recurrence residual for integer β ≥ 1, k ≥ 1 evaluated through :func:`j_int`."""
    if beta < 1 or k < 1:
        raise UnsupportedIndexError(f"recurrence needs beta >= 1 and k >= 1, got ({beta}, {k})")
    j_prev_k = j_int(beta, k - 1, tau, ctx) if k > 1 else 0.0
    return recurrence_residual(
        beta,
        k,
        tau,
        ctx,
        j_int(beta, k, tau, ctx),
        j_prev_k,
        j_int(beta - 1, k, tau, ctx),
        j_int(beta, k + 1, tau, ctx),
    )
