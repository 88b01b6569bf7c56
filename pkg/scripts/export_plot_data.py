#!/usr/bin/env python3
"""Export curve and parametric CSV samples for every catalog entry.

Usage: python scripts/export_plot_data.py [--outdir DIR] [--samples K]
"""

import argparse
from pathlib import Path

from expriordan.catalog import SampleGrid, entry, ids, sample_curve, sample_parametric


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="plot_data")
    ap.add_argument("--tmin", type=float, default=-4.0)
    ap.add_argument("--tmax", type=float, default=4.0)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()

    grid = SampleGrid(t_min=args.tmin, t_max=args.tmax, samples=args.samples)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for eid in ids():
        e = entry(eid)
        curve = outdir / f"{eid}_curve.csv"
        with curve.open("w") as fh:
            fh.write("t,f,fprime\n")
            for row in sample_curve(e, grid):
                fh.write(",".join(f"{v:.15g}" for v in row) + "\n")
        para = outdir / f"{eid}_parametric.csv"
        with para.open("w") as fh:
            fh.write("fprime,f\n")
            for row in sample_parametric(e, grid):
                fh.write(",".join(f"{v:.15g}" for v in row) + "\n")
        print(f"wrote {curve} and {para}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
