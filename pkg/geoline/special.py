"""
Closed forms of the three members with β < −½ that the distance series needs:
I_{−3/2,0}, I_{−1,0} and I_{−1,1}.
"""

from __future__ import annotations

import math

from geoline.elementary import atan_root
from geoline.elliptic_family import amplitude
from geoline.model import FamilyContext, tau_squared


def _outer_atan(tau: float, ctx: FamilyContext, small: float) -> float:
    # arctan((τ/a)·√((a²−b²)/(b²−τ²))) / (a·√(a²−b²))
    bp = ctx.bp
    return atan_root(tau, bp.a2_minus_b2, bp.a2 * small) / bp.a


def i_m32_0(tau: float, ctx: FamilyContext) -> float:
    """I_{−3/2,0}(τ) by partial fractions into Π and E."""
    bp = ctx.bp
    tau_squared(tau, bp)
    if tau == 0.0:
        return 0.0
    amp = amplitude(tau, ctx)
    small = (bp.b - tau) * (bp.b + tau)
    big = (bp.a - tau) * (bp.a + tau)
    inner = amp.e() - tau / bp.a * math.sqrt(small / big)
    e2 = ctx.e * ctx.e
    return (amp.pi() - inner / bp.a2_minus_b2) / ((1.0 - e2) * math.sqrt(bp.prefactor_base))


def i_m1_0(tau: float, ctx: FamilyContext) -> float:
    """I_{−1,0}(τ) as a difference of two arctangents; regular at c = 0."""
    bp = ctx.bp
    tau_squared(tau, bp)
    small = (bp.b - tau) * (bp.b + tau)
    e2 = ctx.e * ctx.e
    body = atan_root(tau, bp.one_minus_b2, small) - _outer_atan(tau, ctx, small)
    return body / ((1.0 - e2) * math.sqrt(bp.prefactor_base))


def i_m1_1(tau: float, ctx: FamilyContext) -> float:
    """I_{−1,1}(τ)."""
    bp = ctx.bp
    tau_squared(tau, bp)
    small = (bp.b - tau) * (bp.b + tau)
    e2 = ctx.e * ctx.e
    body = tau / (bp.b2 * math.sqrt(small)) - _outer_atan(tau, ctx, small)
    return body / (bp.prefactor_base**1.5 * (1.0 - e2 * bp.b2))


def m32_partial_fractions(t: float, ctx: FamilyContext) -> tuple[float, float]:
    """The two integrands whose difference is the I_{−3/2,0} integrand at t.

    1/((1−t²)(a²−t²)^(3/2)) = [1/((1−t²)√(a²−t²)) − 1/(a²−t²)^(3/2)]/(a²−1); the
    first part integrates to Π, the second to the E bracket of :func:`i_m32_0`.
    Both carry the common factor a/((1−e²)√(1−c²e²)·√(b²−t²)).
    """
    bp = ctx.bp
    tau_squared(t, bp)
    big = (bp.a - t) * (bp.a + t)
    e2 = ctx.e * ctx.e
    small = (bp.b - t) * (bp.b + t)
    common = bp.a / ((1.0 - e2) * math.sqrt(bp.prefactor_base * small))
    return (
        common / ((1.0 - t) * (1.0 + t) * math.sqrt(big)),
        common / (big * math.sqrt(big)),
    )
