"""Serialization of trajectories and sundial plates (CSV, JSON, SVG).

All numbers go through ``fmt``/``num`` so that output is byte-stable: at most
10 significant digits, '.' as decimal point, no negative zero.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .geometry import sincosd
from .shadow import (
    DayTrajectory,
    ShadowError,
    ShadowPoint,
    sample_trajectory,
    shadow_tip_parametric,
)
from .solar import (
    DegenerateGeometry,
    ObserverConfig,
    SolarState,
    polar_gnomon_hour_angle,
    solar_altitude,
)

CSV_HEADER = "hour_angle_deg,x,y,q,altitude_deg"


def num(v: float) -> float:
    """Round to 10 significant digits; repr() of the result is the short form."""
    if v is None:
        return None
    r = float(f"{v:.10g}")
    return r + 0.0


def fmt(v: float) -> str:
    return f"{num(v):.10g}"


def _point_row(p: ShadowPoint) -> list[float]:
    return [p.hour_angle, p.x, p.y, p.shadow_param, p.altitude]


def trajectory_csv(traj: DayTrajectory) -> str:
    lines = [CSV_HEADER]
    lines += [",".join(fmt(v) for v in _point_row(p)) for p in traj.points]
    return "\n".join(lines) + "\n"


def coefficients_dict(traj_or_coeffs) -> dict:
    c = getattr(traj_or_coeffs, "coefficients", traj_or_coeffs)
    out = {k: num(getattr(c, k)) for k in "abcdef"}
    out["discriminant"] = num(c.discriminant)
    return out


def boundaries_dict(b) -> dict:
    return {
        "kind": b.kind.value,
        "sunrise_hours": num(b.sunrise_hours),
        "sunset_hours": num(b.sunset_hours),
        "half_arc_deg": num(b.half_arc),
    }


def trajectory_dict(traj: DayTrajectory) -> dict:
    keys = CSV_HEADER.split(",")
    return {
        "observer": {
            "latitude_deg": num(traj.config.latitude),
            "gnomon_height": num(traj.config.gnomon_height),
        },
        "declination_deg": num(traj.declination),
        "conic": traj.conic.value,
        "coefficients": coefficients_dict(traj),
        "boundaries": boundaries_dict(traj.boundaries),
        "points": [dict(zip(keys, map(num, _point_row(p)))) for p in traj.points],
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


# -- SVG ---------------------------------------------------------------------

def _svg_open(comment: str, size: float, box: tuple[float, float, float, float]) -> list[str]:
    x0, y0, x1, y1 = box
    w, h = x1 - x0, y1 - y0
    height = size * h / w
    # viewBox is in dial units with the y axis flipped (svg_y = -dial_y)
    return [
        f"<!-- {comment} -->",
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(size)}" height="{fmt(height)}" '
        f'viewBox="{fmt(x0)} {fmt(-y1)} {fmt(w)} {fmt(h)}">',
    ]


def _polyline(pts, cls: str, stroke: float, colour: str, ident: str = "") -> str:
    coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
    ident = f' id="{ident}"' if ident else ""
    return (f'<polyline{ident} class="{cls}" points="{coords}" fill="none" '
            f'stroke="{colour}" stroke-width="{fmt(stroke)}"/>')


def _comment(params: dict) -> str:
    body = " ".join(f"{k}={v}" for k, v in params.items())
    return f"gnomonics {body}; dial frame x=east y=north(poleward), rendered with scale(1,-1) so north is up"


def trajectory_svg(traj: DayTrajectory, params: dict, size: float = 600.0) -> str:
    pts = [(p.x, p.y) for p in traj.points]
    xs = [0.0] + [x for x, _ in pts]
    ys = [0.0] + [y for _, y in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), traj.config.gnomon_height)
    pad = 0.05 * span
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    stroke = span / 300.0
    out = _svg_open(_comment(params), size, box)
    out.append('<g transform="scale(1,-1)">')
    out.append(f'<circle class="gnomon-base" cx="0" cy="0" r="{fmt(3 * stroke)}" fill="black"/>')
    if pts:
        out.append(_polyline(pts, "trajectory", stroke, "#c0392b"))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class PlateSpec:
    observer: ObserverConfig
    hour_start: int = 6
    hour_end: int = 18
    date_curves: tuple[float, ...] = (-23.44, 0.0, 23.44)
    size: float = 600.0
    min_altitude: float = 0.5
    samples: int = 241
    extent: float | None = None
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not 0 <= self.hour_start <= self.hour_end <= 24:
            raise ValueError("hour range must satisfy 0 <= start <= end <= 24")
        if not self.date_curves:
            raise ValueError("at least one date curve is required")
        if not self.size > 0:
            raise ValueError("size must be positive")
        if self.extent is not None and not self.extent > 0:
            raise ValueError("extent must be positive")


@dataclass(frozen=True)
class HourLine:
    hour: int
    angle: float  # degrees from the meridian, toward +x
    start: tuple[float, float]
    end: tuple[float, float]


def style_root(cfg: ObserverConfig) -> tuple[float, float] | None:
    """Point where a polar style through the gnomon tip meets the dial.

    All hour lines pass through it; it sits h cot(lat) equatorward of the
    gnomon base and is undefined on the equator.
    """
    sl, cl = sincosd(cfg.latitude)
    if abs(sl) < 1e-12:
        return None
    return (0.0, -cfg.gnomon_height * cl / sl)


def _visible_tip(cfg, decl, hour_angle, min_altitude):
    state = SolarState(decl, hour_angle)
    if solar_altitude(cfg.latitude, state) < min_altitude:
        return None
    try:
        return shadow_tip_parametric(cfg, state)
    except ShadowError:
        return None


def hour_lines(spec: PlateSpec) -> list[HourLine]:
    """Hour lines between the extreme date curves on which that hour is sunlit.

    If the hour is sunlit on only one curve, the line runs from the style root
    to that point.
    """
    cfg = spec.observer
    root = style_root(cfg)
    lines = []
    for hour in range(spec.hour_start, spec.hour_end + 1):
        ha = 15.0 * (hour - 12)
        angle = polar_gnomon_hour_angle(cfg.latitude, ha)
        tips = [_visible_tip(cfg, d, ha, spec.min_altitude) for d in spec.date_curves]
        tips = [(p.x, p.y) for p in tips if p is not None]
        if len(tips) >= 2:
            sa, ca = sincosd(angle)
            tips.sort(key=lambda t: t[0] * sa + t[1] * ca)
            start, end = tips[0], tips[-1]
        elif len(tips) == 1 and root is not None:
            start, end = root, tips[0]
        else:
            continue
        lines.append(HourLine(hour, angle, start, end))
    return lines


def date_curves(spec: PlateSpec) -> list[DayTrajectory]:
    out = []
    for decl in spec.date_curves:
        try:
            out.append(sample_trajectory(spec.observer, decl, spec.samples, spec.min_altitude))
        except DegenerateGeometry:
            # sun circling exactly on the horizon: no shadow curve
            continue
    return out


def _plate_extent(spec: PlateSpec, curves) -> float:
    if spec.extent is not None:
        return spec.extent
    h = spec.observer.gnomon_height
    reach = [h]
    for traj in curves:
        noon = _visible_tip(spec.observer, traj.declination, 0.0, spec.min_altitude)
        if noon is not None:
            reach.append(abs(noon.y))
    root = style_root(spec.observer)
    if root is not None and abs(root[1]) < 10 * h:
        reach.append(abs(root[1]))
    return 1.25 * max(reach)


def plate_svg(spec: PlateSpec) -> str:
    cfg = spec.observer
    curves = date_curves(spec)
    lines = hour_lines(spec)
    half = _plate_extent(spec, curves)
    stroke = half / 200.0
    font = half / 15.0
    out = _svg_open(_comment(spec.params), spec.size, (-half, -half, half, half))
    out.append("<defs>")
    out.append(f'<clipPath id="dial"><rect x="{fmt(-half)}" y="{fmt(-half)}" '
               f'width="{fmt(2 * half)}" height="{fmt(2 * half)}"/></clipPath>')
    out.append("</defs>")
    out.append(f'<rect class="plate" x="{fmt(-half)}" y="{fmt(-half)}" width="{fmt(2 * half)}" '
               f'height="{fmt(2 * half)}" fill="white" stroke="black" stroke-width="{fmt(stroke)}"/>')
    out.append('<g transform="scale(1,-1)" clip-path="url(#dial)">')
    for ln in lines:
        (x1, y1), (x2, y2) = ln.start, ln.end
        out.append(f'<line class="hour-line" id="hour-{ln.hour}" x1="{fmt(x1)}" y1="{fmt(y1)}" '
                   f'x2="{fmt(x2)}" y2="{fmt(y2)}" stroke="#34495e" stroke-width="{fmt(stroke)}"/>')
    for i, traj in enumerate(curves):
        pts = [(p.x, p.y) for p in traj.points]
        if pts:
            if _full_turn(traj):
                pts.append(pts[0])
            out.append(_polyline(pts, "date-curve", stroke, "#c0392b", f"date-{i}"))
    out.append(f'<circle class="gnomon-base" cx="0" cy="0" r="{fmt(2 * stroke)}" fill="black"/>')
    out.append("</g>")
    # labels live outside the flipped group so the text is upright
    out.append(f'<g font-family="sans-serif" font-size="{fmt(font)}" fill="#34495e">')
    for ln in lines:
        x, y = ln.end
        if abs(x) < half and abs(y) < half:
            out.append(f'<text class="hour-label" x="{fmt(x)}" y="{fmt(-y)}">{ln.hour}</text>')
    for traj in curves:
        noon = _visible_tip(cfg, traj.declination, 0.0, spec.min_altitude)
        if noon is not None and abs(noon.y) < half:
            out.append(f'<text class="date-label" text-anchor="end" x="{fmt(-font / 4)}" '
                       f'y="{fmt(-noon.y + font)}">'
                       f'decl {traj.declination:+.2f}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _full_turn(traj: DayTrajectory) -> bool:
    # circumpolar samples are cell midpoints, so both ends sit within one step of +/-180
    pts = traj.points
    step = 360.0 / len(pts)
    return len(pts) > 2 and pts[0].hour_angle < -180.0 + step and pts[-1].hour_angle > 180.0 - step
