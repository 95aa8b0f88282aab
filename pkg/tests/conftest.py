"""
Shared fixtures: a clean settings cache per test, the reference ellipsoids and a
quadrature reference for single I_{β,k} members.
"""

import os

import pytest
from scipy import integrate

from geoline.model import Ellipsoid
from geoline.settings import get_settings

E_EARTH = 0.08182


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    """Drop GEOLINE_* variables from the environment and rebuild settings."""
    for name in list(os.environ):
        if name.startswith("GEOLINE_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def earth():
    return Ellipsoid(e=E_EARTH)


@pytest.fixture
def near_sphere():
    return Ellipsoid(e=1e-4)


def _member_by_quadrature(two_beta, k, tau, e, c):
    """I_{β,k}(τ) = ∫₀^τ E^β T^(k−1) / (T − c²E)^(k+½) dt by QUADPACK."""

    def integrand(t):
        big_e = 1.0 - e * e * t * t
        small_t = (1.0 - t) * (1.0 + t)
        return big_e ** (two_beta / 2) * small_t ** (k - 1) / (small_t - c * c * big_e) ** (k + 0.5)

    value, _ = integrate.quad(integrand, 0.0, tau, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


@pytest.fixture
def member_quad():
    return _member_by_quadrature
