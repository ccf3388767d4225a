"""Write horizontal dial plates and solstice/equinox trajectories as SVG files.

    python scripts/render_plates.py --out plates --lats 0 30 45 60 66.56 90
"""

import argparse
from pathlib import Path

from gnomonics import ObserverConfig, sample_trajectory
from gnomonics.output import PlateSpec, plate_svg, trajectory_svg
from gnomonics.solar import DegenerateGeometry


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("plates"))
    ap.add_argument("--lats", type=float, nargs="+", default=[0.0, 30.0, 45.0, 60.0, 66.56, 90.0])
    ap.add_argument("--decls", type=float, nargs="+", default=[-23.44, 0.0, 23.44])
    ap.add_argument("--height", type=float, default=1.0)
    ap.add_argument("--size", type=float, default=600.0)
    args = ap.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    for lat in args.lats:
        cfg = ObserverConfig(lat, args.height)
        spec = PlateSpec(cfg, date_curves=tuple(args.decls), size=args.size,
                         params={"lat": lat, "height": args.height})
        path = args.out / f"plate_lat{lat:+06.2f}.svg"
        path.write_text(plate_svg(spec), encoding="utf-8")
        print(path)
        for d in args.decls:
            try:
                traj = sample_trajectory(cfg, d)
            except DegenerateGeometry as exc:
                print(f"  skip decl {d}: {exc}")
                continue
            if not traj.points:
                print(f"  skip decl {d}: polar night")
                continue
            path = args.out / f"trajectory_lat{lat:+06.2f}_decl{d:+06.2f}.svg"
            params = {"lat": lat, "decl": d, "height": args.height}
            path.write_text(trajectory_svg(traj, params, args.size), encoding="utf-8")
            print(f"  {path} ({traj.conic.value})")


if __name__ == "__main__":
    main()
