"""
Exact rational coefficients of the altitude power series.

Features
--------
* ``kappa_direct`` – the finite binomial sum.
* ``kappa_jacobi`` – closed form through a Jacobi polynomial at zero.
* ``kappa_table`` – a cached, cross-checked table for ``s ≤ s_max``.
* ``series_generating_kappa`` – κ re-derived by convolving the geometric and
  binomial series as polynomials in ``u = h·E^½``; used as a test oracle.
* ``s_coefficient`` – the weights ``C(−½,k)·C(k,s−k)·2^(2k−s)`` of the
  distance series.

Everything is kept as :class:`fractions.Fraction` until the float views
(``kappa_array`` / ``s_coefficient_array``) are requested.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from geoline.errors import GeolineError, UnsupportedIndexError

logger = logging.getLogger(__name__)

_MINUS_HALF = Fraction(-1, 2)


# Rational helpers


def binom(q: int | Fraction, k: int) -> Fraction:
    """Generalised binomial ``C(q, k)`` for any rational *q*; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    out = Fraction(1)
    for j in range(k):
        out = out * (q - j) / (j + 1)
    return out


def _check_indices(s: int, k: int) -> None:
    if s < 0 or k < 0 or k > s:
        raise UnsupportedIndexError(f"kappa index (s={s}, k={k}) needs 0 <= k <= s")


def jacobi_at_zero(n: int, alpha: int | Fraction, beta: int | Fraction) -> Fraction:
    """P_n^(α,β)(0) = 2^(−n) Σ_j (−1)^j C(n+α, n−j) C(n+β, j); zero for n < 0."""
    if n < 0:
        return Fraction(0)
    total = sum(
        (
            (-1) ** j * binom(n + alpha, n - j) * binom(n + beta, j)
            for j in range(n + 1)
        ),
        Fraction(0),
    )
    return total / 2**n


# κ by the two closed forms


def kappa_direct(s: int, k: int) -> Fraction:
    """κ_{s,k} = 4^k C(−½,k) Σ_{l=k}^{min(2k,s)} C(k, l−k) (−½)^l."""
    _check_indices(s, k)
    inner = sum(
        (binom(k, l - k) * _MINUS_HALF**l for l in range(k, min(2 * k, s) + 1)),
        Fraction(0),
    )
    return 4**k * binom(_MINUS_HALF, k) * inner


def kappa_jacobi(s: int, k: int) -> Fraction:
    """κ_{s,k} through ``P^(1+s−k, −k)_{2k−s−1}(0)``; the P term drops out when 2k−s−1 < 0."""
    _check_indices(s, k)
    lead = binom(_MINUS_HALF, k)
    out = (-1) ** k * lead
    n = 2 * k - s - 1
    if n >= 0:
        out += (-1) ** s * Fraction(2) ** n * lead * jacobi_at_zero(n, 1 + s - k, -k)
    return out


# Table


@dataclass(frozen=True)
class KappaTable:
    """Immutable lower-triangular table of κ_{s,k} for ``0 ≤ k ≤ s ≤ s_max``."""

    s_max: int
    entries: Mapping[tuple[int, int], Fraction] = field(repr=False)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.entries[key]

    def __len__(self) -> int:
        return len(self.entries)

    def rows(self) -> Iterator[tuple[int, int, int, int]]:
        """(s, k, numerator, denominator) in row-major order."""
        for s in range(self.s_max + 1):
            for k in range(s + 1):
                v = self.entries[(s, k)]
                yield s, k, v.numerator, v.denominator


@lru_cache(maxsize=None)
def kappa_table(s_max: int) -> KappaTable:
    """Build κ for ``s ≤ s_max`` by the direct sum, cross-checked by the Jacobi form."""
    if s_max < 0:
        raise UnsupportedIndexError(f"s_max={s_max} must be >= 0")

    entries: dict[tuple[int, int], Fraction] = {}
    for s in range(s_max + 1):
        for k in range(s + 1):
            direct = kappa_direct(s, k)
            if direct != kappa_jacobi(s, k):
                raise GeolineError(f"kappa forms disagree at (s={s}, k={k})")
            entries[(s, k)] = direct
    logger.debug("kappa table built up to s=%d (%d entries)", s_max, len(entries))
    return KappaTable(s_max=s_max, entries=entries)


@lru_cache(maxsize=None)
def kappa_array(s_max: int) -> npt.NDArray[np.float64]:
    """Read-only float view of :func:`kappa_table`, zero above the diagonal."""
    table = kappa_table(s_max)
    out = np.zeros((s_max + 1, s_max + 1))
    for (s, k), v in table.entries.items():
        out[s, k] = float(v)
    out.setflags(write=False)
    return out


# Distance-series weights


def s_coefficient(s: int, k: int) -> Fraction:
    """C(−½,k)·C(k,s−k)·2^(2k−s); nonzero only for ⌈s/2⌉ ≤ k ≤ s."""
    _check_indices(s, k)
    if 2 * k < s:
        return Fraction(0)
    return binom(_MINUS_HALF, k) * binom(k, s - k) * Fraction(2) ** (2 * k - s)


@lru_cache(maxsize=None)
def s_coefficient_array(s_max: int) -> npt.NDArray[np.float64]:
    out = np.zeros((s_max + 1, s_max + 1))
    for s in range(s_max + 1):
        for k in range((s + 1) // 2, s + 1):
            out[s, k] = float(s_coefficient(s, k))
    out.setflags(write=False)
    return out


# Generating-function oracle


def _poly_mul(p: list[Fraction], q: list[Fraction], degree: int) -> list[Fraction]:
    out = [Fraction(0)] * (degree + 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q[: degree + 1 - i]):
            out[i + j] += pi * qj
    return out


def series_generating_kappa(s_max: int) -> dict[tuple[int, int], Fraction]:
    """κ from the product ``C(−½,k)(2u+u²)^k · 1/(1+u)`` read off at ``(−u)^s``."""
    if s_max < 0:
        raise UnsupportedIndexError(f"s_max={s_max} must be >= 0")

    geometric = [Fraction((-1) ** j) for j in range(s_max + 1)]
    two_u_plus_u2 = [Fraction(0), Fraction(2), Fraction(1)]

    out: dict[tuple[int, int], Fraction] = {}
    power = [Fraction(1)]
    for k in range(s_max + 1):
        poly = _poly_mul([binom(_MINUS_HALF, k) * c for c in power], geometric, s_max)
        for s in range(k, s_max + 1):
            out[(s, k)] = (-1) ** s * poly[s]
        power = _poly_mul(power, two_u_plus_u2, s_max)
    return out
