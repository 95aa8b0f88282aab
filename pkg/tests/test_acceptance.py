"""
Release checks that cut across modules: ladders and recurrence residuals on
random samples, profile values against quadrature, reproducible CLI output.
"""

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate
from typer.testing import CliRunner

from geoline.cli import app
from geoline.elementary import b_seq, j_recurrence_residual
from geoline.elliptic_family import a_recurrence_residual, a_seq, d_seq, jbar_recurrence_residual
from geoline.model import FamilyContext
from geoline.series import profile_rows

samples = dict(
    e=st.floats(min_value=0.05, max_value=0.3),
    c=st.floats(min_value=0.05, max_value=0.9),
    frac=st.floats(min_value=0.3, max_value=0.9),
    k=st.integers(min_value=1, max_value=3),
)


@settings(max_examples=100, deadline=None)
@given(beta=st.integers(min_value=1, max_value=3), **samples)
def test_integer_recurrence_on_random_samples(e, c, frac, beta, k):
    ctx = FamilyContext.of(e, c)
    assert j_recurrence_residual(beta, k, frac * ctx.bp.b, ctx) < 1e-10


@settings(max_examples=100, deadline=None)
@given(two_beta=st.sampled_from([1, 3, 5]), **samples)
def test_half_integer_recurrence_on_random_samples(e, c, frac, two_beta, k):
    ctx = FamilyContext.of(e, c)
    assert jbar_recurrence_residual(two_beta, k, frac * ctx.bp.b, ctx) < 1e-10


def _quad(f, tau):
    value, _ = integrate.quad(f, 0.0, tau, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


@settings(max_examples=100, deadline=None)
@given(
    b=st.floats(min_value=0.3, max_value=1.0),
    frac=st.floats(min_value=0.05, max_value=0.95),
)
def test_b_ladder_on_random_samples(b, frac):
    tau = frac * b
    for i, value in enumerate(b_seq(6, b, tau)):
        ref = _quad(lambda t: (b * b - t * t) ** (i - 0.5), tau)
        assert value == pytest.approx(ref, rel=1e-12), i


@settings(max_examples=100, deadline=None)
@given(e=samples["e"], c=samples["c"], frac=samples["frac"])
def test_d_ladder_on_random_samples(e, c, frac):
    ctx = FamilyContext.of(e, c)
    bp = ctx.bp
    tau = frac * bp.b
    for value, v in zip(d_seq(4, tau, ctx, v_min=-3), range(-3, 5)):
        ref = _quad(lambda t: (bp.b2 - t * t) ** (-v - 0.5) / math.sqrt(bp.a2 - t * t), tau)
        assert value == pytest.approx(bp.a * bp.b2**v * ref, rel=1e-10), v


@settings(max_examples=100, deadline=None)
@given(
    e=st.floats(min_value=0.05, max_value=0.9),
    c=st.floats(min_value=0.05, max_value=0.95),
    frac=st.floats(min_value=0.05, max_value=0.95),
)
def test_a_ladder_on_random_samples(e, c, frac):
    ctx = FamilyContext.of(e, c)
    bp = ctx.bp
    tau = frac * bp.b
    for l, value in enumerate(a_seq(4, tau, ctx)):
        ref = _quad(lambda t: t ** (2 * l) / math.sqrt((bp.a2 - t * t) * (bp.b2 - t * t)), tau)
        assert value == pytest.approx(bp.a * ref, rel=1e-10), l
    assert a_recurrence_residual(4, tau, ctx) < 1e-10

def test_profile_values_match_quadrature(member_quad):
    e = 0.08182
    rows = list(profile_rows(e, [0.1, 0.5, 0.9], [0, 1, 2], tau_steps=7))
    for row in rows[1::3]:
        if row.tau == 0.0:
            continue
        assert row.value == pytest.approx(member_quad(-1, row.k, row.tau, e, row.c), rel=1e-9)


def test_direct_output_is_reproducible():
    """Parsing the emitted JSON and running again gives identical values."""
    runner = CliRunner()
    args = ["direct", "--c", "0.3", "--tau0", "-0.1", "--tau1", "0.6", "--h", "2e-3"]
    first = json.loads(runner.invoke(app, args).stdout)
    second = json.loads(runner.invoke(app, args).stdout)
    assert first == second
    assert json.loads(json.dumps(first)) == first
