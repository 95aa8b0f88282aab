"""
Closed forms of I_{−3/2,0}, I_{−1,0} and I_{−1,1}: quadrature agreement and
finite-difference checks that they differentiate back to their integrands.
"""

import math

import pytest
from scipy import integrate

from geoline.elliptic_family import amplitude
from geoline.model import FamilyContext
from geoline.special import i_m1_0, i_m1_1, i_m32_0, m32_partial_fractions

CASES = [(i_m32_0, -3, 0), (i_m1_0, -2, 0), (i_m1_1, -2, 1)]
GRID = [
    (e, c, frac)
    for e in (0.08182, 0.3)
    for c in (0.0, 0.1, 0.5, 0.9)
    for frac in (0.2, 0.6, 0.9)
]


def _integrand(two_beta, k, t, e, c):
    big_e = 1.0 - e * e * t * t
    small_t = (1.0 - t) * (1.0 + t)
    return big_e ** (two_beta / 2) * small_t ** (k - 1) / (small_t - c * c * big_e) ** (k + 0.5)


@pytest.mark.parametrize("fn,two_beta,k", CASES)
@pytest.mark.parametrize("e,c,frac", GRID)
def test_against_quadrature(fn, two_beta, k, e, c, frac, member_quad):
    ctx = FamilyContext.of(e, c)
    tau = frac * ctx.bp.b
    assert fn(tau, ctx) == pytest.approx(member_quad(two_beta, k, tau, e, c), rel=1e-10)


@pytest.mark.parametrize("fn,two_beta,k", CASES)
@pytest.mark.parametrize("c", [0.1, 0.5, 0.9])
def test_differentiates_back(fn, two_beta, k, c):
    e = 0.08182
    ctx = FamilyContext.of(e, c)
    tau, step = 0.5 * ctx.bp.b, 1e-5
    slope = (fn(tau + step, ctx) - fn(tau - step, ctx)) / (2 * step)
    assert slope == pytest.approx(_integrand(two_beta, k, tau, e, c), rel=1e-7)


@pytest.mark.parametrize("fn,two_beta,k", CASES)
def test_odd_and_zero_at_origin(fn, two_beta, k):
    ctx = FamilyContext.of(0.08182, 0.5)
    assert fn(0.0, ctx) == 0.0
    tau = 0.4 * ctx.bp.b
    assert fn(-tau, ctx) == pytest.approx(-fn(tau, ctx), rel=1e-14)


@pytest.mark.parametrize("e", [0.08182, 0.3])
@pytest.mark.parametrize("c", [0.0, 0.5, 0.9])
def test_partial_fractions_recombine(e, c):
    ctx = FamilyContext.of(e, c)
    for frac in (0.0, 0.1, 0.4, 0.7, 0.95):
        t = frac * ctx.bp.b
        pi_part, e_part = m32_partial_fractions(t, ctx)
        assert pi_part - e_part == pytest.approx(_integrand(-3, 0, t, e, c), rel=1e-13)


def test_pi_part_integrates_to_pi():
    e, c = 0.08182, 0.6
    ctx = FamilyContext.of(e, c)
    tau = 0.8 * ctx.bp.b
    value, _ = integrate.quad(
        lambda t: m32_partial_fractions(t, ctx)[0], 0.0, tau, epsabs=0.0, epsrel=1e-13
    )
    scale = (1 - e * e) * math.sqrt(ctx.bp.prefactor_base)
    assert value == pytest.approx(amplitude(tau, ctx).pi() / scale, rel=1e-11)
