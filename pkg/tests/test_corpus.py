"""
Parameterized test that replays every row in *corpus.csv* against the
quadrature oracle.

Each row names an ellipsoid, an altitude, c, the lower limit and the upper
limit as a fraction of the branch point b(c), the series order and the
relative tolerance both Δλ and s must meet. Rows that start with ``#`` in the
*case* column are comments and skipped.
"""

import csv
import pathlib

import pytest

from geoline.model import Ellipsoid, GeodesicSpec, branch_params
from geoline.oracle import quad_distance, quad_longitude
from geoline.series import distance_integral, longitude_integral

CORPUS = pathlib.Path(__file__).parent / "corpus.csv"


def corpus_spec(row):
    e, c = float(row["e"]), float(row["c"])
    spec = GeodesicSpec(
        h=float(row["h"]),
        c=c,
        tau0=float(row["tau0"]),
        tau1=float(row["frac"]) * branch_params(e, c).b,
        order=int(row["order"]),
    )
    return Ellipsoid(e=e), spec


@pytest.mark.parametrize("row", csv.DictReader(CORPUS.open(), skipinitialspace=True))
def test_corpus_row(row):
    """Series and oracle agree to the row's relative tolerance."""
    if row["case"].startswith("#"):
        return  # skip commented rows

    ellipsoid, spec = corpus_spec(row)
    rel = float(row["rel_tol"])
    assert longitude_integral(ellipsoid, spec).value == pytest.approx(
        quad_longitude(ellipsoid, spec), rel=rel
    )
    assert distance_integral(ellipsoid, spec).value == pytest.approx(
        quad_distance(ellipsoid, spec), rel=rel
    )
