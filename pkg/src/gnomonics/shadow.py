"""Shadow-tip locus of a vertical gnomon on a horizontal dial.

Two independent routes give the same point:

* the parametric route intersects the solar ray through the gnomon tip with
  the tilted dial plane by a generic 3x3 solve (``shadow_tip_parametric``);
* the classical closed form ``y(x)`` (``arab_formula_y``).

Trajectories are always produced by the parametric route; the closed form is
kept as an API and as a cross-check.

The tip satisfies the unsquared cone relation

    h sin(lat) - y cos(lat) = sin(d) * sqrt(x^2 + y^2 + h^2)

(the left side is the component of tip-to-shadow along the celestial axis).
Squaring it gives the implicit conic returned by ``conic_coefficients``; the
squared form also contains the anti-solar nappe, so membership of the
physical branch is checked with ``branch_residual``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .geometry import sincosd, solve_shadow_system
from .solar import (
    DayBoundaries,
    ObserverConfig,
    SolarState,
    check_declination,
    day_boundaries,
    gnomon_vector,
    solar_altitude,
    sun_direction,
)

PARABOLA_TOL = 1e-12
HORIZON_TOL = 1e-9  # degrees


class ShadowError(ValueError):
    pass


class SunBelowHorizon(ShadowError):
    pass


class SunOnHorizon(ShadowError):
    pass


class ParabolicDegeneracy(ShadowError):
    pass


class NegativeRadicand(ShadowError):
    pass


class NoShadow(ShadowError):
    pass


@dataclass(frozen=True)
class ShadowPoint:
    x: float
    y: float
    hour_angle: float
    shadow_param: float
    altitude: float


class ConicClass(enum.Enum):
    HYPERBOLA = "Hyperbola"
    PARABOLA = "Parabola"
    ELLIPSE_OR_CIRCLE = "EllipseOrCircle"
    CIRCLE = "Circle"
    LINE = "Line"


@dataclass(frozen=True)
class ConicCoefficients:
    """Coefficients of a x^2 + b xy + c y^2 + d x + e y + f = 0."""

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    @property
    def discriminant(self) -> float:
        return self.b * self.b - 4.0 * self.a * self.c

    def residual(self, x: float, y: float) -> float:
        return (self.a * x * x + self.b * x * y + self.c * y * y
                + self.d * x + self.e * y + self.f)


@dataclass(frozen=True)
class DayTrajectory:
    config: ObserverConfig
    declination: float
    points: tuple[ShadowPoint, ...]
    conic: ConicClass
    coefficients: ConicCoefficients
    boundaries: DayBoundaries


def shadow_tip_parametric(cfg: ObserverConfig, state: SolarState) -> ShadowPoint:
    """Shadow tip from the ray/plane intersection at one instant."""
    alt = solar_altitude(cfg.latitude, state)
    if abs(alt) < HORIZON_TOL:
        raise SunOnHorizon(f"sun on the horizon (altitude {alt:.3g} deg)")
    if alt <= 0.0:
        raise SunBelowHorizon(f"sun below the horizon (altitude {alt:.6g} deg)")
    q, x, y = solve_shadow_system(sun_direction(state), gnomon_vector(cfg), cfg.latitude)
    return ShadowPoint(x + 0.0, y + 0.0, state.hour_angle, q, alt)


def arab_formula_y(cfg: ObserverConfig, decl: float, x: float) -> float:
    """Closed-form meridian coordinate of the shadow tip for a given ``x``.

    y = (-h sin(lat) cos(lat) + sin(d) sqrt((cos^2 lat - sin^2 d) x^2 + h^2 cos^2 d))
        / (sin^2 d - cos^2 lat)

    with the positive square root.  This is a single-valued function of x, so on
    an elliptic (circumpolar) path it only describes the half nearer the noon
    shadow.
    """
    h = cfg.gnomon_height
    sl, cl = sincosd(cfg.latitude)
    sd, cd = sincosd(decl)
    den = sd * sd - cl * cl
    if abs(den) < PARABOLA_TOL:
        raise ParabolicDegeneracy("sin^2(decl) == cos^2(lat); use the parametric path")
    rad = (cl * cl - sd * sd) * x * x + h * h * cd * cd
    if rad < 0.0:
        raise NegativeRadicand(f"x={x!r} lies outside the real locus")
    return (-h * sl * cl + sd * math.sqrt(rad)) / den


def conic_coefficients(cfg: ObserverConfig, decl: float) -> ConicCoefficients:
    """Implicit quadratic obtained by squaring the cone relation.

    a = -sin^2 d, c = cos^2 lat - sin^2 d, e = -2 h sin lat cos lat,
    f = h^2 (sin^2 lat - sin^2 d), b = d = 0.  Multiplying through by
    (cos^2 lat - sin^2 d) gives the form you get by squaring the closed-form y(x);
    the unscaled version is kept because it stays non-trivial on the parabola.
    """
    h = cfg.gnomon_height
    sl, cl = sincosd(cfg.latitude)
    sd, _ = sincosd(decl)
    sd2 = sd * sd
    return ConicCoefficients(
        a=-sd2,
        b=0.0,
        c=cl * cl - sd2,
        d=0.0,
        e=-2.0 * h * sl * cl,
        f=h * h * (sl * sl - sd2),
    )


def branch_residual(cfg: ObserverConfig, decl: float, x: float, y: float) -> float:
    """Residual of the unsquared cone relation; ~0 only on the sunlit nappe."""
    h = cfg.gnomon_height
    sl, cl = sincosd(cfg.latitude)
    sd, _ = sincosd(decl)
    return (h * sl - y * cl) - sd * math.sqrt(x * x + y * y + h * h)


def classify_conic(lat: float, decl: float, tol: float = PARABOLA_TOL) -> ConicClass:
    sl, cl = sincosd(lat)
    sd, _ = sincosd(decl)
    if abs(sd) < tol:
        return ConicClass.LINE
    if abs(cl) < tol:
        return ConicClass.CIRCLE
    k = cl * cl - sd * sd
    if abs(k) < tol:
        return ConicClass.PARABOLA
    if k > 0:
        return ConicClass.HYPERBOLA
    return ConicClass.ELLIPSE_OR_CIRCLE


def north_pole_radius(cfg: ObserverConfig, decl: float) -> float:
    """Radius of the circular shadow path at the pole: h cos d / sin d.

    The shadow length of a gnomon under a sun at altitude d.
    """
    sd, cd = sincosd(decl)
    if sd <= 0.0:
        raise NoShadow("sun is not above the polar horizon")
    return cfg.gnomon_height * cd / sd


def _clipped_hour_limit(lat: float, decl: float, min_altitude: float) -> float | None:
    """Half-width in degrees of the hour-angle arc with altitude >= min_altitude.

    Returns 180.0 for the whole day and None if the sun never gets that high.
    """
    sl, cl = sincosd(lat)
    sd, cd = sincosd(decl)
    sm, _ = sincosd(min_altitude)
    den = cl * cd
    if den == 0.0:
        # altitude does not depend on H
        return 180.0 if sl * sd >= sm else None
    c = (sm - sl * sd) / den
    if c <= -1.0:
        return 180.0
    if c >= 1.0:
        return None
    return math.degrees(math.acos(c))


def sample_trajectory(cfg: ObserverConfig, decl: float, n: int = 241,
                      min_altitude: float = 0.5, parabola_tol: float = PARABOLA_TOL,
                      strict: bool = False) -> DayTrajectory:
    """Sample the day's shadow path at ``n`` hour angles uniform over the sunlit arc.

    Only hour angles where the sun is at least ``min_altitude`` high are used,
    which keeps shadows finite near sunrise and sunset.  A circumpolar day is
    sampled at cell midpoints over the full turn.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    if not min_altitude > 0.0:
        raise ValueError("min_altitude must be positive")
    check_declination(decl, strict)
    lat = cfg.latitude
    boundaries = day_boundaries(lat, decl)
    limit = _clipped_hour_limit(lat, decl, min_altitude)
    if limit is None:
        hours = []
    elif limit == 180.0:
        hours = [-180.0 + 360.0 * (k + 0.5) / n for k in range(n)]
    else:
        step = 2.0 * limit / (n - 1)
        hours = [-limit + k * step for k in range(n - 1)] + [limit]
    points = tuple(shadow_tip_parametric(cfg, SolarState(decl, hh)) for hh in hours)
    return DayTrajectory(
        config=cfg,
        declination=decl,
        points=points,
        conic=classify_conic(lat, decl, parabola_tol),
        coefficients=conic_coefficients(cfg, decl),
        boundaries=boundaries,
    )
