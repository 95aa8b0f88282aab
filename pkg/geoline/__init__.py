"""
geoline package initialization.

Semi-analytic evaluation of the longitude–latitude coupling integral and the
arc length of geodetic lines at constant altitude over an oblate ellipsoid.
The public entry points are re-exported here; everything works in scaled
units (lengths divided by the equatorial radius).
"""

from geoline.inverse import InverseProblem, InverseSolution, solve_c
from geoline.model import (
    BranchParams,
    Ellipsoid,
    EvalPoint,
    GeodesicSpec,
    branch_params,
    eval_point,
    validate_domain,
)
from geoline.series import (
    IntegralResult,
    di_dc,
    distance_integral,
    longitude_and_derivative,
    longitude_integral,
)

__all__ = [
    "BranchParams",
    "Ellipsoid",
    "EvalPoint",
    "GeodesicSpec",
    "IntegralResult",
    "InverseProblem",
    "InverseSolution",
    "branch_params",
    "di_dc",
    "distance_integral",
    "eval_point",
    "longitude_and_derivative",
    "longitude_integral",
    "solve_c",
    "validate_domain",
]
