"""
Ad-hoc accuracy checker for the geoline series.

* Replays every row in *tests/corpus.csv* through the series and the oracle.
* Prints the relative error of Δλ and s per row and the worst case of each.

Read-only: no side-effects besides console output.
"""

from __future__ import annotations

import csv
from pathlib import Path

from geoline.model import Ellipsoid, GeodesicSpec, branch_params
from geoline.oracle import quad_distance, quad_longitude
from geoline.series import distance_integral, longitude_integral

CORPUS = Path("tests") / "corpus.csv"  # adjust if moved


def _rel(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference) if reference else abs(value)


worst = {"delta_lambda": (0.0, ""), "s": (0.0, "")}
failures: list[str] = []

with CORPUS.open() as fh:
    for row in csv.DictReader(fh, skipinitialspace=True):
        if row["case"].startswith("#"):
            continue  # skip comments

        e, c = float(row["e"]), float(row["c"])
        ellipsoid = Ellipsoid(e=e)
        spec = GeodesicSpec(
            h=float(row["h"]),
            c=c,
            tau0=float(row["tau0"]),
            tau1=float(row["frac"]) * branch_params(e, c).b,
            order=int(row["order"]),
        )
        errs = {
            "delta_lambda": _rel(
                longitude_integral(ellipsoid, spec).value, quad_longitude(ellipsoid, spec)
            ),
            "s": _rel(distance_integral(ellipsoid, spec).value, quad_distance(ellipsoid, spec)),
        }
        print(f"{row['case']:<18} dλ {errs['delta_lambda']:9.2e}   s {errs['s']:9.2e}")
        for name, err in errs.items():
            if err > worst[name][0]:
                worst[name] = (err, row["case"])
            if err > float(row["rel_tol"]):
                failures.append(f"{row['case']}: {name} rel. error {err:.2e} > {row['rel_tol']}")

print()
for name, (err, case) in worst.items():
    print(f"worst {name:<13} {err:9.2e}  ({case})")

if failures:
    print("\nOut of tolerance:")
    print("\n".join(failures))
