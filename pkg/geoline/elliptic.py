"""
Incomplete Legendre elliptic integrals on top of Carlson's symmetric forms.

* ``carlson_rf`` / ``carlson_rd`` / ``carlson_rj`` / ``carlson_rc`` by the
  duplication theorem with the seventh-order Taylor tail.
* ``ellip_f`` / ``ellip_e`` / ``ellip_pi`` for ξ in [−π/2, π/2] (odd in ξ).
* ``ellip_f_minus_e`` evaluates F − E without subtraction; the moduli met in
  geodesy (k = b·e) are tiny and F, E agree to many digits there.
* ``Amplitude`` bundles sin ξ, cos² ξ and the modulus so callers that know
  sin ξ exactly (sin ξ = τ/b) never round-trip through ``asin``.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from geoline.errors import DomainError

_TOL = 1.0e-15
_MAX_ITER = 100


# Carlson symmetric forms


def _check_nonneg(name: str, *args: float) -> None:
    if any(v < 0.0 for v in args):
        raise DomainError(f"{name}: negative argument in {args!r}")
    if sum(1 for v in args if v == 0.0) > 1:
        raise DomainError(f"{name}: more than one zero argument in {args!r}")


def carlson_rf(x: float, y: float, z: float) -> float:
    """R_F(x, y, z) = ½∫₀^∞ [(t+x)(t+y)(t+z)]^(−½) dt."""
    _check_nonneg("carlson_rf", x, y, z)

    a0 = (x + y + z) / 3.0
    q = (3.0 * _TOL) ** (-1.0 / 8.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    xn, yn, zn = x, y, z
    an, f = a0, 1.0
    for _ in range(_MAX_ITER):
        if q < abs(an):
            break
        sx, sy, sz = math.sqrt(xn), math.sqrt(yn), math.sqrt(zn)
        lam = sx * sy + sx * sz + sy * sz
        xn, yn, zn = (xn + lam) / 4.0, (yn + lam) / 4.0, (zn + lam) / 4.0
        an = (an + lam) / 4.0
        q /= 4.0
        f *= 4.0

    X = (a0 - x) / (an * f)
    Y = (a0 - y) / (an * f)
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    poly = (
        1.0
        + e3 * (1.0 / 14.0 + 3.0 * e3 / 104.0)
        + e2 * (-1.0 / 10.0 + e2 / 24.0 - 3.0 * e3 / 44.0 - 5.0 * e2 * e2 / 208.0 + e2 * e3 / 16.0)
    )
    return poly / math.sqrt(an)


def _tail_rd_rj(e2: float, e3: float, e4: float, e5: float) -> float:
    return (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
        - e2 * e2 * e2 / 16.0
        + 3.0 * e3 * e3 / 40.0
        + 3.0 * e2 * e4 / 20.0
        + 45.0 * e2 * e2 * e3 / 272.0
        - 9.0 * (e3 * e4 + e2 * e5) / 68.0
    )


def carlson_rd(x: float, y: float, z: float) -> float:
    """R_D(x, y, z) = R_J(x, y, z, z); requires z > 0."""
    _check_nonneg("carlson_rd", x, y, z)
    if z == 0.0:
        raise DomainError("carlson_rd: z must be positive")

    a0 = (x + y + 3.0 * z) / 5.0
    q = (_TOL / 4.0) ** (-1.0 / 8.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z)) * 1.2
    xn, yn, zn = x, y, z
    an, f, acc = a0, 1.0, 0.0
    for _ in range(_MAX_ITER):
        if q < an:
            break
        sx, sy, sz = math.sqrt(xn), math.sqrt(yn), math.sqrt(zn)
        lam = sx * sy + sx * sz + sy * sz
        acc += f / (sz * (zn + lam))
        xn, yn, zn = (xn + lam) / 4.0, (yn + lam) / 4.0, (zn + lam) / 4.0
        an = (an + lam) / 4.0
        q /= 4.0
        f /= 4.0

    X = f * (a0 - x) / an
    Y = f * (a0 - y) / an
    Z = -(X + Y) / 3.0
    e2 = X * Y - 6.0 * Z * Z
    e3 = (3.0 * X * Y - 8.0 * Z * Z) * Z
    e4 = 3.0 * (X * Y - Z * Z) * Z * Z
    e5 = X * Y * Z * Z * Z
    return 3.0 * acc + f * an ** (-1.5) * _tail_rd_rj(e2, e3, e4, e5)


def carlson_rc(x: float, y: float) -> float:
    """R_C(x, y) = R_F(x, y, y) for x ≥ 0, y > 0, in closed form."""
    if x < 0.0 or y <= 0.0:
        raise DomainError(f"carlson_rc: need x >= 0 and y > 0, got {(x, y)!r}")
    if x == 0.0:
        return math.pi / (2.0 * math.sqrt(y))
    if x == y:
        return 1.0 / math.sqrt(x)
    d = math.sqrt(abs(x - y))
    if y > x:
        return math.atan(math.sqrt((y - x) / x)) / d
    return math.log((math.sqrt(x) + d) / math.sqrt(y)) / d


def _rc_one_plus(t: float) -> float:
    """R_C(1, 1 + t) for t ≠ −1 without cancellation at small |t|."""
    if t == 0.0:
        return 1.0
    if t < -1.0:
        return math.sqrt(-1.0 / t) * carlson_rc(-t, -1.0 - t)
    r = math.sqrt(abs(t))
    if t > 0.0:
        return math.atan(r) / r
    if t > -0.5:
        return math.atanh(r) / r
    return math.log((1.0 + r) / math.sqrt(1.0 + t)) / r


def carlson_rj(x: float, y: float, z: float, p: float) -> float:
    """R_J(x, y, z, p) = 3/2 ∫₀^∞ dt / ((t+p)√((t+x)(t+y)(t+z))), p > 0."""
    _check_nonneg("carlson_rj", x, y, z)
    if p <= 0.0:
        raise DomainError(f"carlson_rj: p must be positive, got {p!r}")

    a0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    q = (_TOL / 5.0) ** (-1.0 / 8.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p)
    )
    xn, yn, zn, pn = x, y, z, p
    an, f, acc = a0, 1.0, 0.0
    for _ in range(_MAX_ITER):
        if f * q < an:
            break
        rx, ry, rz, rp = math.sqrt(xn), math.sqrt(yn), math.sqrt(zn), math.sqrt(pn)
        dn = (rp + rx) * (rp + ry) * (rp + rz)
        en = delta / dn / dn
        if -1.5 < en < -0.5:
            acc += f / dn * carlson_rc(1.0, 2.0 * rp * (pn + rx * (ry + rz) + ry * rz) / dn)
        else:
            acc += f / dn * _rc_one_plus(en)
        lam = rx * ry + rx * rz + ry * rz
        xn, yn, zn = (xn + lam) / 4.0, (yn + lam) / 4.0, (zn + lam) / 4.0
        pn = (pn + lam) / 4.0
        an = (an + lam) / 4.0
        delta /= 64.0
        f /= 4.0

    X = f * (a0 - x) / an
    Y = f * (a0 - y) / an
    Z = f * (a0 - z) / an
    P = -0.5 * (X + Y + Z)
    e2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    e3 = X * Y * Z + 2.0 * e2 * P + 4.0 * P * P * P
    e4 = (2.0 * X * Y * Z + e2 * P + 3.0 * P * P * P) * P
    e5 = X * Y * Z * P * P
    return 6.0 * acc + f * an ** (-1.5) * _tail_rd_rj(e2, e3, e4, e5)


# Legendre forms


class Amplitude(BaseModel):
    """Amplitude ξ of an incomplete integral, its modulus k and characteristic n."""

    model_config = ConfigDict(frozen=True)

    xi: float = Field(..., ge=-math.pi / 2, le=math.pi / 2)
    sin_xi: float
    cos2_xi: float = Field(..., ge=0)
    k: float = Field(0.0, ge=0, lt=1)
    n: float = 0.0

    @classmethod
    def from_angle(cls, xi: float, k: float = 0.0, n: float = 0.0) -> Amplitude:
        return cls(xi=xi, sin_xi=math.sin(xi), cos2_xi=math.cos(xi) ** 2, k=k, n=n)

    @classmethod
    def from_sine(cls, s: float, cos2: float, k: float = 0.0, n: float = 0.0) -> Amplitude:
        """Build from sin ξ with an independently accurate cos² ξ."""
        return cls(xi=math.asin(max(-1.0, min(1.0, s))), sin_xi=s, cos2_xi=cos2, k=k, n=n)

    @property
    def delta2(self) -> float:
        return 1.0 - self.k * self.k * self.sin_xi * self.sin_xi

    def f(self) -> float:
        s = self.sin_xi
        if s == 0.0:
            return 0.0
        return s * carlson_rf(self.cos2_xi, self.delta2, 1.0)

    def f_minus_e(self) -> float:
        s = self.sin_xi
        if s == 0.0 or self.k == 0.0:
            return 0.0
        return self.k * self.k * s**3 / 3.0 * carlson_rd(self.cos2_xi, self.delta2, 1.0)

    def e(self) -> float:
        return self.f() - self.f_minus_e()

    def pi(self) -> float:
        s = self.sin_xi
        if s == 0.0:
            return 0.0
        p = 1.0 - self.n * s * s
        if p <= 0.0:
            raise DomainError(f"ellip_pi: n*sin^2(xi) = {self.n * s * s!r} >= 1")
        rf = carlson_rf(self.cos2_xi, self.delta2, 1.0)
        if self.n == 0.0:
            return s * rf
        return s * rf + self.n * s**3 / 3.0 * carlson_rj(self.cos2_xi, self.delta2, 1.0, p)


def _amplitude(xi: float, k: float, n: float = 0.0) -> Amplitude:
    if not -math.pi / 2 <= xi <= math.pi / 2:
        raise DomainError(f"amplitude xi={xi!r} outside [-pi/2, pi/2]")
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k={k!r} outside [0, 1)")
    return Amplitude.from_angle(xi, k, n)


def ellip_f(xi: float, k: float) -> float:
    """Incomplete integral of the first kind F(ξ, k)."""
    return _amplitude(xi, k).f()


def ellip_e(xi: float, k: float) -> float:
    """Incomplete integral of the second kind E(ξ, k)."""
    return _amplitude(xi, k).e()


def ellip_pi(xi: float, n: float, k: float) -> float:
    """Incomplete integral of the third kind Π(ξ, n, k) with n sin²ξ < 1."""
    return _amplitude(xi, k, n).pi()


def ellip_f_minus_e(xi: float, k: float) -> float:
    return _amplitude(xi, k).f_minus_e()


def ellip_k(k: float) -> float:
    """Complete integral K(k)."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k={k!r} outside [0, 1)")
    return carlson_rf(0.0, (1.0 - k) * (1.0 + k), 1.0)


def ellip_e_complete(k: float) -> float:
    """Complete integral E(k)."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k={k!r} outside [0, 1)")
    kc2 = (1.0 - k) * (1.0 + k)
    return carlson_rf(0.0, kc2, 1.0) - k * k / 3.0 * carlson_rd(0.0, kc2, 1.0)
