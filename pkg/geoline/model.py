"""
Core data-model classes for the geodetic-line integrals.

Includes:
* **Ellipsoid**, **GeodesicSpec**, **BranchParams**, **EvalPoint**, **FamilyContext**
* ``branch_params``, ``validate_domain`` and ``eval_point``.

All lengths are scaled by the equatorial radius; ``h`` and ``c`` are
dimensionless and latitudes enter only through ``τ = sin φ``.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, computed_field

from geoline.errors import DomainError, SingularityError

# WGS84 equatorial radius (m) and eccentricity with ρ_p² = ρ_e²(1 − e²)
_WGS84_RHO_E = 6378137.0
_WGS84_E = 0.0818191908426


# Core model classes


class Ellipsoid(BaseModel):
    """Reference surface fixed by the equatorial radius and the eccentricity."""

    model_config = ConfigDict(frozen=True)

    rho_e: float = Field(1.0, gt=0)
    e: float = Field(..., gt=0, lt=1)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def rho_p(self) -> float:
        return self.rho_e * math.sqrt((1.0 - self.e) * (1.0 + self.e))

    @classmethod
    def wgs84(cls) -> Ellipsoid:
        return cls(rho_e=_WGS84_RHO_E, e=_WGS84_E)


class GeodesicSpec(BaseModel):
    """One geodetic line (h, c) between two latitude limits τ0 → τ1."""

    model_config = ConfigDict(frozen=True)

    h: float = Field(0.0, ge=0)
    c: float = Field(..., ge=0, lt=1)
    tau0: float = Field(0.0, gt=-1, lt=1)
    tau1: float = Field(..., gt=-1, lt=1)
    order: int = Field(8, ge=0)

    @property
    def tau_max(self) -> float:
        return max(abs(self.tau0), abs(self.tau1))


class BranchParams(BaseModel):
    """Parameters a, b of the branch points and elliptic moduli.

    ``a`` is the positive root of ``a² = 1/e²`` so that ``1 − e²τ² = e²(a² − τ²)``;
    ``b`` is the positive root of ``b² = (1 − c²)/(1 − c²e²)``.
    """

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    modulus: float
    prefactor_base: float
    a2: float
    b2: float
    one_minus_b2: float
    a2_minus_b2: float
    a2_minus_1: float


class EvalPoint(BaseModel):
    """The shorthands T, E and the substitution variables x = τ², z = 1/(b² − x)."""

    model_config = ConfigDict(frozen=True)

    tau: float
    T: float
    E_sub: float
    x: float
    z: float


class FamilyContext(BaseModel):
    """(e, c) plus their branch parameters, shared by all integral families."""

    model_config = ConfigDict(frozen=True)

    e: float
    c: float
    bp: BranchParams

    @classmethod
    def of(cls, e: float, c: float) -> FamilyContext:
        return cls(e=e, c=c, bp=branch_params(e, c))


# Operations


def branch_params(e: float, c: float) -> BranchParams:
    """Return the branch parameters for eccentricity *e* and obliquity *c*."""
    if not 0.0 < e < 1.0:
        raise DomainError(f"eccentricity e={e!r} outside (0, 1)")
    if not 0.0 <= c < 1.0:
        raise DomainError(f"obliquity c={c!r} outside [0, 1)")

    e2 = e * e
    c2 = c * c
    base = 1.0 - c2 * e2
    b2 = (1.0 - c2) / base
    return BranchParams(
        a=1.0 / e,
        b=math.sqrt(b2),
        modulus=math.sqrt(b2) * e,
        prefactor_base=base,
        a2=1.0 / e2,
        b2=b2,
        one_minus_b2=c2 * (1.0 - e2) / base,
        a2_minus_b2=(1.0 - e2 * b2) / e2,
        a2_minus_1=(1.0 - e2) / e2,
    )


def validate_domain(spec: GeodesicSpec, bp: BranchParams, margin: float) -> bool:
    """True iff both latitude limits stay *margin* (relative) inside the branch point."""
    return spec.tau_max <= bp.b * (1.0 - margin)


def tau_squared(tau: float, bp: BranchParams) -> float:
    """x = τ², raising :class:`SingularityError` at or beyond the branch point."""
    x = tau * tau
    if x >= bp.b2:
        raise SingularityError(f"|tau|={abs(tau)!r} reaches the branch point b={bp.b!r}")
    return x


def eval_point(tau: float, e: float, bp: BranchParams) -> EvalPoint:
    """Shorthands at one latitude; raises :class:`SingularityError` at |τ| ≥ b."""
    x = tau_squared(tau, bp)
    return EvalPoint(
        tau=tau,
        T=(1.0 - tau) * (1.0 + tau),
        E_sub=1.0 - e * e * x,
        x=x,
        z=1.0 / (bp.b2 - x),
    )


def require_domain(spec: GeodesicSpec, e: float, margin: float, h_max: float) -> FamilyContext:
    """Family context for *spec*, or :class:`DomainError` naming the violated bound."""
    if not 0.0 < margin < 1.0:
        raise DomainError(f"margin={margin!r} outside (0, 1)")
    if spec.h > h_max:
        raise DomainError(f"h={spec.h!r} exceeds h_max={h_max!r}")
    ctx = FamilyContext.of(e, spec.c)
    if not validate_domain(spec, ctx.bp, margin):
        limit = ctx.bp.b * (1.0 - margin)
        raise DomainError(f"max|tau|={spec.tau_max!r} exceeds b*(1-margin)={limit!r}")
    return ctx
