"""
Carlson forms and Legendre integrals against scipy and direct quadrature.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, special

from geoline.elliptic import (
    carlson_rc,
    carlson_rd,
    carlson_rf,
    carlson_rj,
    ellip_e,
    ellip_e_complete,
    ellip_f,
    ellip_f_minus_e,
    ellip_k,
    ellip_pi,
)
from geoline.errors import DomainError

XI = [0.05, 0.4, 0.9, 1.3, math.pi / 2 - 1e-3]
K = [0.0, 1e-4, 0.005, 0.01, 0.3, 0.7, 0.95]
N = [-0.8, 0.0, 1e-3, 0.3, 0.7]


def _legendre(f, xi):
    value, _ = integrate.quad(f, 0.0, xi, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


@pytest.mark.parametrize(
    "args",
    [(1.0, 2.0, 3.0), (0.0, 0.5, 1.0), (2.0, 3.0, 4.0), (1e-3, 1.0, 1.0), (0.8, 0.2, 5.0)],
)
def test_rf_matches_scipy(args):
    assert carlson_rf(*args) == pytest.approx(special.elliprf(*args), rel=1e-13)


@pytest.mark.parametrize("args", [(1.0, 2.0, 3.0), (0.0, 2.0, 1.0), (0.5, 1.0, 0.2)])
def test_rd_matches_scipy(args):
    assert carlson_rd(*args) == pytest.approx(special.elliprd(*args), rel=1e-13)


@pytest.mark.parametrize(
    "args",
    [
        (1.0, 2.0, 3.0, 4.0),
        (0.5, 0.9, 1.0, 0.7),
        (0.0, 0.99, 1.0, 0.999),
        (0.3, 0.6, 1.0, 0.1),
        (2.0, 3.0, 4.0, 50.0),
    ],
)
def test_rj_matches_scipy(args):
    assert carlson_rj(*args) == pytest.approx(special.elliprj(*args), rel=1e-13)


@pytest.mark.parametrize("args", [(1.0, 2.0), (2.0, 1.0), (0.0, 0.25), (3.0, 3.0)])
def test_rc_matches_scipy(args):
    assert carlson_rc(*args) == pytest.approx(special.elliprc(*args), rel=1e-13)


def test_carlson_domain_errors():
    with pytest.raises(DomainError):
        carlson_rf(-1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        carlson_rf(0.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        carlson_rd(1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        carlson_rj(1.0, 1.0, 1.0, 0.0)


@pytest.mark.parametrize("xi", XI)
@pytest.mark.parametrize("k", K)
def test_f_and_e_against_quadrature(xi, k):
    f_ref = _legendre(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), xi)
    e_ref = _legendre(lambda t: math.sqrt(1.0 - (k * math.sin(t)) ** 2), xi)
    assert ellip_f(xi, k) == pytest.approx(f_ref, rel=1e-12)
    assert ellip_e(xi, k) == pytest.approx(e_ref, rel=1e-12)
    assert ellip_f(xi, k) == pytest.approx(special.ellipkinc(xi, k * k), rel=1e-13)
    assert ellip_e(xi, k) == pytest.approx(special.ellipeinc(xi, k * k), rel=1e-13)


@pytest.mark.parametrize("xi", XI)
@pytest.mark.parametrize("k", K)
@pytest.mark.parametrize("n", N)
def test_pi_against_quadrature(xi, k, n):
    def integrand(t):
        s2 = math.sin(t) ** 2
        return 1.0 / ((1.0 - n * s2) * math.sqrt(1.0 - k * k * s2))

    assert ellip_pi(xi, n, k) == pytest.approx(_legendre(integrand, xi), rel=1e-12)


@pytest.mark.parametrize("k", [1e-4, 0.005, 0.01, 0.3])
def test_f_minus_e_without_cancellation(k):
    """F − E for tiny moduli keeps its relative precision."""
    xi = 0.7
    ref = _legendre(
        lambda t: (k * math.sin(t)) ** 2 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), xi
    )
    assert ellip_f_minus_e(xi, k) == pytest.approx(ref, rel=1e-12)


@given(
    xi=st.floats(min_value=0.0, max_value=1.5),
    k=st.floats(min_value=0.0, max_value=0.9),
    n=st.floats(min_value=-1.0, max_value=0.9),
)
def test_legendre_forms_are_odd(xi, k, n):
    assert ellip_f(-xi, k) == -ellip_f(xi, k)
    assert ellip_e(-xi, k) == -ellip_e(xi, k)
    assert ellip_pi(-xi, n, k) == -ellip_pi(xi, n, k)


@pytest.mark.parametrize("k", [0.01, 0.3, 0.6, 0.9])
def test_legendre_relation(k):
    kp = math.sqrt(1.0 - k * k)
    lhs = (
        ellip_e_complete(k) * ellip_k(kp)
        + ellip_e_complete(kp) * ellip_k(k)
        - ellip_k(k) * ellip_k(kp)
    )
    assert lhs == pytest.approx(math.pi / 2, rel=1e-13)


def test_complete_matches_scipy():
    for k in np.linspace(0.0, 0.95, 7):
        assert ellip_k(k) == pytest.approx(special.ellipk(k * k), rel=1e-13)
        assert ellip_e_complete(k) == pytest.approx(special.ellipe(k * k), rel=1e-13)


def test_legendre_domain_errors():
    with pytest.raises(DomainError):
        ellip_f(2.0, 0.1)
    with pytest.raises(DomainError):
        ellip_e(0.5, 1.0)
    with pytest.raises(DomainError):
        ellip_pi(1.2, 1.5, 0.1)
