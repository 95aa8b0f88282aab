"""
FastAPI wrapper around the geoline integrals.

Endpoints mirror the CLI: the direct problem, the inverse problem, the
quadrature oracle and the κ table. Every evaluation is recorded in the run
journal, which is mounted read-only under ``/journal``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from geoline import journal
from geoline.errors import DomainError, QuadratureError, SolverError, UnsupportedIndexError
from geoline.inverse import InverseProblem, solve_c
from geoline.journal import router as journal_router
from geoline.kappa import kappa_table
from geoline.model import Ellipsoid, GeodesicSpec
from geoline.oracle import Quadrature, quad_distance, quad_longitude
from geoline.series import IntegralResult, distance_integral, longitude_integral
from geoline.settings import get_settings

# FastAPI instance and journal router integration
app = FastAPI(title="geoline")
app.include_router(journal_router, prefix="/journal", tags=["journal"])


# Pydantic models
class DirectRequest(BaseModel):
    ellipsoid: Ellipsoid = Field(default_factory=Ellipsoid.wgs84)
    spec: GeodesicSpec
    check: bool = False


class DirectResponse(BaseModel):
    delta_lambda: IntegralResult
    distance: IntegralResult
    oracle_delta: float | None = None


class InverseRequest(BaseModel):
    ellipsoid: Ellipsoid = Field(default_factory=Ellipsoid.wgs84)
    problem: InverseProblem


class InverseResponse(BaseModel):
    c: float
    iterations: int
    residual: float


class OracleRequest(BaseModel):
    ellipsoid: Ellipsoid = Field(default_factory=Ellipsoid.wgs84)
    spec: GeodesicSpec


class OracleResponse(BaseModel):
    delta_lambda: float
    distance: float


class KappaEntry(BaseModel):
    s: int
    k: int
    numerator: int
    denominator: int


def _unprocessable(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.post("/direct", response_model=DirectResponse)
def direct(req: DirectRequest) -> DirectResponse:
    settings = get_settings()
    try:
        lon = longitude_integral(req.ellipsoid, req.spec, settings)
        dist = distance_integral(req.ellipsoid, req.spec, settings)
        oracle_delta = None
        if req.check:
            q = Quadrature.from_settings(settings)
            oracle_delta = abs(lon.value - quad_longitude(req.ellipsoid, req.spec, q))
    except (DomainError, UnsupportedIndexError) as exc:
        raise _unprocessable(exc) from exc
    except QuadratureError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc

    # distance multiplied by rho_e (metres for WGS84)
    out = DirectResponse(
        delta_lambda=lon, distance=dist.scaled(req.ellipsoid.rho_e), oracle_delta=oracle_delta
    )
    journal.write(
        operation="direct",
        inputs=req.model_dump(),
        outputs={"delta_lambda": lon.value, "distance": out.distance.value},
    )
    return out


@app.post("/inverse", response_model=InverseResponse)
def inverse(req: InverseRequest) -> InverseResponse:
    try:
        sol = solve_c(req.problem, req.ellipsoid, get_settings())
    except DomainError as exc:
        raise _unprocessable(exc) from exc
    except SolverError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc

    out = InverseResponse(c=sol.c, iterations=sol.iterations, residual=sol.residual)
    journal.write(operation="inverse", inputs=req.model_dump(), outputs=out.model_dump())
    return out


@app.post("/oracle", response_model=OracleResponse)
def oracle(req: OracleRequest) -> OracleResponse:
    q = Quadrature.from_settings(get_settings())
    try:
        out = OracleResponse(
            delta_lambda=quad_longitude(req.ellipsoid, req.spec, q),
            distance=req.ellipsoid.rho_e * quad_distance(req.ellipsoid, req.spec, q),
        )
    except DomainError as exc:
        raise _unprocessable(exc) from exc
    except QuadratureError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc

    journal.write(operation="oracle", inputs=req.model_dump(), outputs=out.model_dump())
    return out


@app.get("/kappa", response_model=list[KappaEntry])
def kappa(smax: int = Query(9, ge=0, le=40)) -> list[KappaEntry]:
    """κ_{s,k} as exact numerator/denominator pairs."""
    return [
        KappaEntry(s=s, k=k, numerator=num, denominator=den)
        for s, k, num, den in kappa_table(smax).rows()
    ]
