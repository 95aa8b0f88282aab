"""
Half-integer members: the D, K and A ladders and I_{β,k} for β = −½, ½, 3/2, …
"""

import math

import pytest
from scipy import integrate

from geoline.elliptic_family import (
    a_recurrence_residual,
    a_seq,
    amplitude,
    d_downward,
    d_seq,
    i_halfint,
    jbar_beta0,
    jbar_recurrence_residual,
    k_seq,
)
from geoline.errors import UnsupportedIndexError
from geoline.model import FamilyContext

GRID = [
    (e, c, frac)
    for e in (0.08182, 0.3)
    for c in (0.1, 0.5, 0.9)
    for frac in (0.3, 0.9)
]


def _quad(f, tau):
    value, _ = integrate.quad(f, 0.0, tau, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


def _d_reference(v, tau, ctx):
    bp = ctx.bp
    return (
        bp.a
        * bp.b2**v
        * _quad(lambda t: (bp.b2 - t * t) ** (-v - 0.5) / math.sqrt(bp.a2 - t * t), tau)
    )


def test_amplitude_sine():
    ctx = FamilyContext.of(0.08182, 0.5)
    amp = amplitude(0.4, ctx)
    assert amp.sin_xi == pytest.approx(0.4 / ctx.bp.b, rel=1e-15)
    assert amp.k == ctx.bp.modulus
    assert amp.n == ctx.bp.b2


@pytest.mark.parametrize("e,c,frac", GRID)
def test_d_seq_against_quadrature(e, c, frac):
    ctx = FamilyContext.of(e, c)
    tau = frac * ctx.bp.b
    ladder = d_seq(4, tau, ctx, v_min=-3)
    for value, v in zip(ladder, range(-3, 5)):
        assert value == pytest.approx(_d_reference(v, tau, ctx), rel=1e-10), v


def test_k_seq_downward_fallback():
    """Strongly eccentric surfaces take the downward recurrence."""
    ctx = FamilyContext.of(0.9, 0.3)
    tau = 0.8 * ctx.bp.b
    ladder = k_seq(4, tau, ctx)
    bp = ctx.bp
    for j, value in enumerate(ladder):
        ref = _quad(lambda t: (bp.b2 - t * t) ** (j - 0.5) / math.sqrt(bp.a2 - t * t), tau)
        assert value == pytest.approx(ref, rel=1e-10), j


def test_downward_matches_expansion_for_few_steps():
    ctx = FamilyContext.of(0.3, 0.5)
    tau = 0.7 * ctx.bp.b
    down = d_downward(-2, tau, ctx)
    expanded = d_seq(0, tau, ctx, v_min=-2)
    for lhs, rhs in zip(down, expanded):
        assert lhs == pytest.approx(rhs, rel=1e-9)


def _a_reference(l, tau, ctx):
    bp = ctx.bp
    return bp.a * _quad(
        lambda t: t ** (2 * l) / math.sqrt((bp.a2 - t * t) * (bp.b2 - t * t)), tau
    )


@pytest.mark.parametrize("e,c,frac", GRID + [(0.9, 0.3, 0.9)])
def test_a_seq_against_quadrature(e, c, frac):
    ctx = FamilyContext.of(e, c)
    tau = frac * ctx.bp.b
    for l, value in enumerate(a_seq(4, tau, ctx)):
        assert value == pytest.approx(_a_reference(l, tau, ctx), rel=1e-11), l


def test_a_seq_on_earth_example():
    ctx = FamilyContext.of(0.08182, 0.5)
    ladder = a_seq(4, 0.4, ctx)
    for l, value in enumerate(ladder):
        assert value == pytest.approx(_a_reference(l, 0.4, ctx), rel=1e-11), l
    assert list(a_seq(4, -0.4, ctx)) == [-x for x in ladder]
    assert list(a_seq(4, 0.0, ctx)) == [0.0] * 5


@pytest.mark.parametrize("e,c,frac", GRID)
def test_a_seq_seeds(e, c, frac):
    """X_0 = F(ξ, b/a) and X_1 = a²·(F − E)."""
    ctx = FamilyContext.of(e, c)
    tau = frac * ctx.bp.b
    amp = amplitude(tau, ctx)
    ladder = a_seq(1, tau, ctx)
    assert ladder[0] == pytest.approx(amp.f(), rel=1e-12)
    assert ladder[1] == pytest.approx(ctx.bp.a2 * amp.f_minus_e(), rel=1e-12)


@pytest.mark.parametrize("e,c,frac", GRID)
def test_a_seq_satisfies_recurrence(e, c, frac):
    ctx = FamilyContext.of(e, c)
    assert a_recurrence_residual(6, frac * ctx.bp.b, ctx) < 1e-10


def test_a_recurrence_needs_three_rungs():
    with pytest.raises(UnsupportedIndexError):
        a_recurrence_residual(1, 0.3, FamilyContext.of(0.08182, 0.5))


@pytest.mark.parametrize("e,c,frac", GRID)
@pytest.mark.parametrize("two_beta", [-1, 1, 3, 5])
@pytest.mark.parametrize("k", range(4))
def test_i_halfint_against_quadrature(e, c, frac, two_beta, k, member_quad):
    ctx = FamilyContext.of(e, c)
    tau = frac * ctx.bp.b
    assert i_halfint(two_beta, k, tau, ctx) == pytest.approx(
        member_quad(two_beta, k, tau, e, c), rel=1e-10
    )


@pytest.mark.parametrize("two_beta,k", [(-1, 0), (3, 0), (1, 2), (5, 3)])
def test_i_halfint_is_odd(two_beta, k):
    ctx = FamilyContext.of(0.08182, 0.4)
    tau = 0.6 * ctx.bp.b
    assert i_halfint(two_beta, k, -tau, ctx) == pytest.approx(
        -i_halfint(two_beta, k, tau, ctx), rel=1e-14
    )


@pytest.mark.parametrize("e,c,frac", GRID)
@pytest.mark.parametrize("two_beta", [1, 3, 5])
@pytest.mark.parametrize("k", range(1, 4))
def test_recurrence_residual(e, c, frac, two_beta, k):
    ctx = FamilyContext.of(e, c)
    assert jbar_recurrence_residual(two_beta, k, frac * ctx.bp.b, ctx) < 1e-10


def test_zero_limit_and_bad_indices():
    ctx = FamilyContext.of(0.08182, 0.5)
    assert jbar_beta0(3, 0.0, ctx) == 0.0
    assert i_halfint(1, 2, 0.0, ctx) == 0.0
    with pytest.raises(UnsupportedIndexError):
        i_halfint(2, 1, 0.1, ctx)
    with pytest.raises(UnsupportedIndexError):
        i_halfint(-3, 1, 0.1, ctx)
    with pytest.raises(UnsupportedIndexError):
        jbar_recurrence_residual(-1, 1, 0.1, ctx)
