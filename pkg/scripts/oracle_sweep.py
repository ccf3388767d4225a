"""Compare the closed-form y(x) with the parametric shadow tip over a (lat, decl) grid.

Prints one row per grid cell: conic class, number of samples, worst disagreement
and the hour angle where it occurs.  Elliptic (circumpolar) rows show where a
single-valued y(x) stops describing the path.

    python scripts/oracle_sweep.py --lat-step 10 --samples 241
"""

import argparse
import math
import time

from gnomonics import ObserverConfig, arab_formula_y, sample_trajectory
from gnomonics.shadow import ShadowError

DECLS = (-23.44, -20.0, -16.0, -12.0, -8.0, -4.0, 4.0, 8.0, 12.0, 16.0, 20.0, 23.44)


def sweep(lat_step: int, samples: int, min_altitude: float, height: float):
    for lat in range(-80, 81, lat_step):
        cfg = ObserverConfig(float(lat), height)
        for d in DECLS:
            traj = sample_trajectory(cfg, d, samples, min_altitude)
            worst, at = 0.0, None
            for p in traj.points:
                try:
                    err = abs(arab_formula_y(cfg, d, p.x) - p.y)
                except ShadowError:
                    err = math.inf
                if err > worst:
                    worst, at = err, p.hour_angle
            yield lat, d, traj.conic.value, len(traj.points), worst, at


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lat-step", type=int, default=10)
    ap.add_argument("--samples", type=int, default=241)
    ap.add_argument("--min-altitude", type=float, default=0.5)
    ap.add_argument("--height", type=float, default=1.0)
    ap.add_argument("--tol", type=float, default=1e-9, help="relative to the gnomon height")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    rows = list(sweep(args.lat_step, args.samples, args.min_altitude, args.height))
    elapsed = time.perf_counter() - t0

    print(f"{'lat':>5} {'decl':>7} {'conic':<16} {'n':>4} {'max err':>10} {'at H':>9}")
    bad = 0
    for lat, d, conic, n, worst, at in rows:
        flag = "" if worst < args.tol * args.height else "  <-"
        bad += bool(flag)
        at_s = f"{at:9.3f}" if at is not None else f"{'-':>9}"
        print(f"{lat:5d} {d:7.2f} {conic:<16} {n:4d} {worst:10.3g} {at_s}{flag}")
    print(f"\n{bad} of {len(rows)} rows exceed {args.tol:g} h; sweep took {elapsed:.3f} s")


if __name__ == "__main__":
    main()
