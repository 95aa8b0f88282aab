"""
Command-line interface (CLI) for the geoline integrals.

Example – direct problem on WGS84 between the equator and 30°N
--------------------------------------------------------------
    geolinectl direct --c 0.5 --tau1 30 --degrees --h 0.001 --check

Data goes to stdout (JSON for ``direct``/``inverse``/``oracle``, CSV for
``kappa``/``profile``); diagnostics go to stderr. Exit codes: 0 success,
2 domain error, 3 solver failure.
"""

from __future__ import annotations

import csv
import math
import sys
from collections.abc import Iterator
from contextlib import contextmanager

import typer
from pydantic import BaseModel, Field, ValidationError

from geoline import journal
from geoline.errors import DomainError, QuadratureError, SolverError, UnsupportedIndexError
from geoline.inverse import InverseProblem, solve_c
from geoline.kappa import kappa_table
from geoline.model import Ellipsoid, GeodesicSpec
from geoline.oracle import Quadrature, quad_distance, quad_longitude
from geoline.series import distance_integral, longitude_integral, profile_rows
from geoline.settings import get_settings

_WGS84 = Ellipsoid.wgs84()

# Typer application instance
app = typer.Typer(
    add_completion=False,
    help="Longitude difference and distance of geodetic lines at constant altitude.",
)


# Output models


class RunConfig(BaseModel):
    """Ellipsoid and print options shared by the JSON commands."""

    ellipsoid: Ellipsoid
    degrees: bool = False
    metres: bool = False
    digits: int = Field(17, ge=1, le=17)

    def scale(self, value: float) -> float:
        """Scaled length times ρ_e."""
        return value * self.ellipsoid.rho_e

    def tau(self, value: float) -> float:
        return math.sin(math.radians(value)) if self.degrees else value

    def length(self, value: float) -> float:
        """Input length → scaled length."""
        return value / self.ellipsoid.rho_e if self.metres else value

    def round(self, value: float) -> float:
        return float(f"{value:.{self.digits}g}")


class DirectOutput(BaseModel):
    delta_lambda_rad: float
    s: float
    terms: list[float]
    trunc_estimate: float
    delta_lambda_deg: float | None = None
    oracle_delta: float | None = None


class InverseOutput(BaseModel):
    c: float
    iterations: int
    residual: float
    c_metres: float | None = None


class OracleOutput(BaseModel):
    delta_lambda_rad: float
    s: float


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except (DomainError, UnsupportedIndexError, ValidationError) as exc:
        typer.echo(f"domain error: {exc}", err=True)
        raise typer.Exit(code=2) from exc
    except SolverError as exc:
        typer.echo(f"solver error: {exc}", err=True)
        raise typer.Exit(code=3) from exc
    except QuadratureError as exc:
        typer.echo(f"quadrature error: {exc}", err=True)
        raise typer.Exit(code=1) from exc


def _floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


# Commands


@app.command()
def direct(
    c: float = typer.Option(..., "--c", help="Obliquity parameter (scaled, or metres)"),
    tau1: float = typer.Option(..., "--tau1", help="Upper limit τ1 = sin φ1"),
    tau0: float = typer.Option(0.0, "--tau0", help="Lower limit τ0 = sin φ0"),
    h: float = typer.Option(0.0, "--h", help="Altitude (scaled, or metres)"),
    e: float = typer.Option(_WGS84.e, "--e", help="Eccentricity"),
    rho_e: float = typer.Option(1.0, "--rho-e", help="Equatorial radius s is multiplied by"),
    order: int | None = typer.Option(None, "--order", help="Highest altitude order"),
    check: bool = typer.Option(False, "--check", help="Compare with the quadrature oracle"),
    degrees: bool = typer.Option(False, "--degrees", help="Limits are latitudes in degrees"),
    metres: bool = typer.Option(False, "--metres", help="h and c are given in metres"),
    digits: int = typer.Option(17, "--digits", help="Significant digits printed (≤ 17)"),
) -> None:
    """Δλ (radians) and distance s for one geodetic line."""
    settings = get_settings()
    with _exit_codes():
        cfg = RunConfig(
            ellipsoid=Ellipsoid(rho_e=rho_e, e=e), degrees=degrees, metres=metres, digits=digits
        )
        spec = GeodesicSpec(
            h=cfg.length(h),
            c=cfg.length(c),
            tau0=cfg.tau(tau0),
            tau1=cfg.tau(tau1),
            order=settings.order if order is None else order,
        )
        lon = longitude_integral(cfg.ellipsoid, spec, settings)
        dist = distance_integral(cfg.ellipsoid, spec, settings)
        out = DirectOutput(
            delta_lambda_rad=cfg.round(lon.value),
            s=cfg.round(cfg.scale(dist.value)),
            terms=[cfg.round(t) for t in lon.terms],
            trunc_estimate=cfg.round(lon.trunc_estimate),
            delta_lambda_deg=cfg.round(math.degrees(lon.value)) if degrees else None,
        )
        if check:
            reference = quad_longitude(cfg.ellipsoid, spec, Quadrature.from_settings(settings))
            out.oracle_delta = cfg.round(abs(lon.value - reference))

    typer.echo(out.model_dump_json(exclude_none=True))
    journal.write(
        operation="direct",
        inputs={"e": e, "rho_e": rho_e, **spec.model_dump()},
        outputs=out.model_dump(exclude_none=True),
    )


@app.command()
def inverse(
    delta_lambda: float = typer.Option(..., "--delta-lambda", help="Target Δλ (radians)"),
    tau1: float = typer.Option(..., "--tau1", help="Upper limit τ1 = sin φ1"),
    tau0: float = typer.Option(0.0, "--tau0", help="Lower limit τ0 = sin φ0"),
    h: float = typer.Option(0.0, "--h", help="Altitude (scaled, or metres)"),
    e: float = typer.Option(_WGS84.e, "--e", help="Eccentricity"),
    rho_e: float = typer.Option(1.0, "--rho-e", help="Equatorial radius"),
    order: int | None = typer.Option(None, "--order", help="Highest altitude order"),
    degrees: bool = typer.Option(
        False, "--degrees", help="Limits and Δλ are given in degrees"
    ),
    metres: bool = typer.Option(False, "--metres", help="h is given in metres"),
    digits: int = typer.Option(17, "--digits", help="Significant digits printed (≤ 17)"),
) -> None:
    """Recover c from a target longitude difference."""
    settings = get_settings()
    with _exit_codes():
        cfg = RunConfig(
            ellipsoid=Ellipsoid(rho_e=rho_e, e=e), degrees=degrees, metres=metres, digits=digits
        )
        problem = InverseProblem(
            target_dlambda=math.radians(delta_lambda) if degrees else delta_lambda,
            tau0=cfg.tau(tau0),
            tau1=cfg.tau(tau1),
            h=cfg.length(h),
            order=settings.order if order is None else order,
        )
        sol = solve_c(problem, cfg.ellipsoid, settings)
        out = InverseOutput(
            c=cfg.round(sol.c),
            iterations=sol.iterations,
            residual=sol.residual,
            c_metres=cfg.round(cfg.scale(sol.c)) if metres else None,
        )

    typer.echo(out.model_dump_json(exclude_none=True))
    journal.write(
        operation="inverse",
        inputs={"e": e, "rho_e": rho_e, **problem.model_dump()},
        outputs=out.model_dump(exclude_none=True),
    )


@app.command()
def kappa(smax: int = typer.Option(9, "--smax", help="Largest series order")) -> None:
    """Exact κ table as CSV rows s,k,numerator,denominator."""
    with _exit_codes():
        table = kappa_table(smax)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["s", "k", "numerator", "denominator"])
    writer.writerows(table.rows())


@app.command()
def profile(
    e: float = typer.Option(_WGS84.e, "--e", help="Eccentricity"),
    c_list: str | None = typer.Option(None, "--c-list", help="Comma separated c values"),
    k_list: str | None = typer.Option(None, "--k-list", help="Comma separated k values"),
    beta: float = typer.Option(-0.5, "--beta", help="Half-integer or integer β"),
    tau_steps: int = typer.Option(50, "--tau-steps", help="Grid points from τ = 0"),
) -> None:
    """I_{β,k}(τ) from τ = 0 up to b(c)·(1 − margin) as CSV rows c,k,tau,value."""
    settings = get_settings()
    with _exit_codes():
        two_beta = 2.0 * beta
        if two_beta != round(two_beta):
            raise UnsupportedIndexError(f"beta={beta!r} is not a multiple of 1/2")
        rows = list(
            profile_rows(
                e,
                _floats(c_list or settings.profile_c),
                _ints(k_list or settings.profile_k),
                int(two_beta),
                tau_steps,
                settings,
            )
        )
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["c", "k", "tau", "value"])
    writer.writerows(rows)


@app.command()
def oracle(
    c: float = typer.Option(..., "--c", help="Obliquity parameter (scaled)"),
    tau1: float = typer.Option(..., "--tau1", help="Upper limit τ1 = sin φ1"),
    tau0: float = typer.Option(0.0, "--tau0", help="Lower limit τ0 = sin φ0"),
    h: float = typer.Option(0.0, "--h", help="Altitude (scaled)"),
    e: float = typer.Option(_WGS84.e, "--e", help="Eccentricity"),
    rho_e: float = typer.Option(1.0, "--rho-e", help="Equatorial radius s is multiplied by"),
) -> None:
    """Δλ and s by adaptive quadrature of the raw integrands."""
    settings = get_settings()
    with _exit_codes():
        ellipsoid = Ellipsoid(rho_e=rho_e, e=e)
        spec = GeodesicSpec(h=h, c=c, tau0=tau0, tau1=tau1)
        q = Quadrature.from_settings(settings)
        out = OracleOutput(
            delta_lambda_rad=quad_longitude(ellipsoid, spec, q),
            s=rho_e * quad_distance(ellipsoid, spec, q),
        )

    typer.echo(out.model_dump_json())
    journal.write(
        operation="oracle",
        inputs={"e": e, "rho_e": rho_e, **spec.model_dump()},
        outputs=out.model_dump(),
    )


# ``python -m geoline.cli`` entry-point

def main() -> None:  # pragma: no cover
    app()


if __name__ == "__main__":
    app()
