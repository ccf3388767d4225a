"""Command line front end.

Exit codes:
    0  success
    2  invalid arguments or an undefined input combination
    3  polar night: the sun never rises, an empty result is written
"""

from __future__ import annotations

import argparse
import sys

from . import output
from .shadow import PARABOLA_TOL, classify_conic, conic_coefficients, sample_trajectory
from .solar import (
    OBLIQUITY,
    DayKind,
    DegenerateGeometry,
    ObserverConfig,
    SolarState,
    check_declination,
    day_boundaries,
    declination_from_day_of_year,
    solar_altitude,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_POLAR_NIGHT = 3


def _observer_args(p: argparse.ArgumentParser, need_decl: bool = True) -> None:
    p.add_argument("--lat", type=float, required=True, help="latitude in degrees (+N)")
    p.add_argument("--height", type=float, default=1.0, help="gnomon height (default 1.0)")
    p.add_argument("--strict", action="store_true",
                   help=f"reject declinations beyond +/-{OBLIQUITY} degrees")
    if need_decl:
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--decl", type=float, help="solar declination in degrees")
        g.add_argument("--day-of-year", type=int,
                       help="day of year 1..366 (approximate declination)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gnomonics",
        description="Shadow-tip trajectories and horizontal sundial layout for a vertical gnomon.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trajectory", help="sample the day's shadow-tip path")
    _observer_args(p)
    p.add_argument("--samples", type=int, default=241)
    p.add_argument("--min-altitude", type=float, default=0.5)
    p.add_argument("--parabola-tol", type=float, default=PARABOLA_TOL)
    p.add_argument("--format", choices=["csv", "json", "svg"], default="csv")
    p.add_argument("--size", type=float, default=600.0, help="SVG width in pixels")

    p = sub.add_parser("classify", help="conic type and implicit coefficients of the path")
    _observer_args(p)
    p.add_argument("--parabola-tol", type=float, default=PARABOLA_TOL)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("sun", help="sunrise, sunset and altitude")
    _observer_args(p)
    p.add_argument("--hour-angle", type=float, help="hour angle in degrees (0 at noon)")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("plate", help="SVG layout of a horizontal sundial")
    _observer_args(p, need_decl=False)
    p.add_argument("--hours", default="6-18", help="whole-hour range START-END (default 6-18)")
    p.add_argument("--dates", default="-23.44,0,23.44",
                   help="comma-separated declinations for the date curves")
    p.add_argument("--size", type=float, default=600.0)
    p.add_argument("--extent", type=float, help="half-width of the plate in dial units")
    p.add_argument("--samples", type=int, default=241)
    p.add_argument("--min-altitude", type=float, default=0.5)
    p.add_argument("--format", choices=["svg"], default="svg")
    return parser


def _declination(args) -> float:
    if args.decl is not None:
        decl = args.decl
    else:
        decl = declination_from_day_of_year(args.day_of_year)
    return check_declination(decl, args.strict)


def _params(args) -> dict:
    # stable, locale-free record of the effective arguments for the SVG header
    return {k: v for k, v in sorted(vars(args).items()) if v is not None}


def cmd_trajectory(args, out, err) -> int:
    cfg = ObserverConfig(args.lat, args.height)
    traj = sample_trajectory(cfg, _declination(args), args.samples, args.min_altitude,
                             args.parabola_tol, args.strict)
    if args.format == "csv":
        out.write(output.trajectory_csv(traj))
    elif args.format == "json":
        out.write(output.to_json(output.trajectory_dict(traj)))
    else:
        out.write(output.trajectory_svg(traj, _params(args), args.size))
    if traj.boundaries.kind is DayKind.POLAR_NIGHT:
        err.write("polar night: the sun does not rise, no shadow\n")
        return EXIT_POLAR_NIGHT
    return EXIT_OK


def cmd_classify(args, out, err) -> int:
    cfg = ObserverConfig(args.lat, args.height)
    decl = _declination(args)
    conic = classify_conic(cfg.latitude, decl, args.parabola_tol)
    coeffs = output.coefficients_dict(conic_coefficients(cfg, decl))
    if args.format == "json":
        out.write(output.to_json({"conic": conic.value, "coefficients": coeffs}))
    else:
        out.write(conic.value + "\n")
        for k, v in coeffs.items():
            out.write(f"{k} {output.fmt(v)}\n")
    return EXIT_OK


def cmd_sun(args, out, err) -> int:
    decl = _declination(args)
    cfg = ObserverConfig(args.lat)
    b = day_boundaries(cfg.latitude, decl)
    alt = None
    if args.hour_angle is not None:
        alt = solar_altitude(cfg.latitude, SolarState(decl, args.hour_angle))
    if args.format == "json":
        doc = {"boundaries": output.boundaries_dict(b)}
        if alt is not None:
            doc["altitude_deg"] = output.num(alt)
        out.write(output.to_json(doc))
        return EXIT_OK
    if b.kind is DayKind.NORMAL:
        out.write(f"sunrise {b.sunrise_hours:.3f}\nsunset {b.sunset_hours:.3f}\n")
    else:
        out.write("POLAR_DAY\n" if b.kind is DayKind.POLAR_DAY else "POLAR_NIGHT\n")
    if alt is not None:
        out.write(f"altitude {output.fmt(alt)}\n")
    return EXIT_OK


def _parse_hours(text: str) -> tuple[int, int]:
    try:
        start, end = (int(t) for t in text.split("-"))
    except ValueError:
        raise ValueError(f"bad hour range {text!r}, expected START-END") from None
    return start, end


def cmd_plate(args, out, err) -> int:
    start, end = _parse_hours(args.hours)
    try:
        dates = tuple(float(t) for t in args.dates.split(","))
    except ValueError:
        raise ValueError(f"bad declination list {args.dates!r}") from None
    for d in dates:
        check_declination(d, args.strict)
    spec = output.PlateSpec(
        observer=ObserverConfig(args.lat, args.height),
        hour_start=start,
        hour_end=end,
        date_curves=dates,
        size=args.size,
        min_altitude=args.min_altitude,
        samples=args.samples,
        extent=args.extent,
        params=_params(args),
    )
    out.write(output.plate_svg(spec))
    return EXIT_OK


COMMANDS = {
    "trajectory": cmd_trajectory,
    "classify": cmd_classify,
    "sun": cmd_sun,
    "plate": cmd_plate,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out, err)
    except (ValueError, DegenerateGeometry) as exc:
        err.write(f"gnomonics {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
