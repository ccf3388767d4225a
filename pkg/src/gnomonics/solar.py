"""Sun direction and the classical solar relations derived from it.

All angles are in degrees.  The frame is equatorial: +z toward the celestial
north pole and the equinox-noon sun along +y.  Hour angle is 0 at local solar
noon, positive in the afternoon, 15 degrees per hour.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from .geometry import Vec3, dot, mat_apply, rot_x, rot_z, sincosd, dial_tilt

OBLIQUITY = 23.44


class DegenerateGeometry(ValueError):
    """Raised when an input combination leaves a quantity undefined."""


def normalize_hour_angle(h: float) -> float:
    """Wrap an hour angle into (-180, 180]."""
    r = math.fmod(h, 360.0)
    if r <= -180.0:
        r += 360.0
    elif r > 180.0:
        r -= 360.0
    return r + 0.0


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


def check_declination(decl: float, strict: bool = False) -> float:
    _check_finite("declination", decl)
    limit = OBLIQUITY if strict else 90.0
    if abs(decl) > limit:
        raise ValueError(f"declination {decl} outside [-{limit}, {limit}]")
    return decl


@dataclass(frozen=True)
class ObserverConfig:
    latitude: float
    gnomon_height: float = 1.0

    def __post_init__(self):
        _check_finite("latitude", self.latitude)
        if abs(self.latitude) > 90.0:
            raise ValueError(f"latitude {self.latitude} outside [-90, 90]")
        if not (math.isfinite(self.gnomon_height) and self.gnomon_height > 0):
            raise ValueError(f"gnomon height must be positive, got {self.gnomon_height!r}")


@dataclass(frozen=True)
class SolarState:
    declination: float
    hour_angle: float = 0.0
    strict: bool = field(default=False, compare=False)

    def __post_init__(self):
        check_declination(self.declination, self.strict)
        _check_finite("hour angle", self.hour_angle)
        object.__setattr__(self, "hour_angle", normalize_hour_angle(self.hour_angle))


class DayKind(enum.Enum):
    NORMAL = "Normal"
    POLAR_DAY = "PolarDay"
    POLAR_NIGHT = "PolarNight"


@dataclass(frozen=True)
class DayBoundaries:
    kind: DayKind
    sunrise_hours: Optional[float] = None
    sunset_hours: Optional[float] = None
    half_arc: Optional[float] = None


def sun_direction(state: SolarState) -> Vec3:
    """Propagation direction of the solar rays: (cos d sin H, cos d cos H, -sin d).

    Built as rot_z(H) @ rot_x(d) applied to the equinox-noon seed (0, 1, 0).
    """
    s1 = mat_apply(rot_x(state.declination), Vec3(0.0, 1.0, 0.0))
    return mat_apply(rot_z(state.hour_angle), s1)


def gnomon_vector(cfg: ObserverConfig) -> Vec3:
    """Vertical gnomon of height h at latitude lat: (0, -h cos lat, h sin lat)."""
    return mat_apply(dial_tilt(cfg.latitude), Vec3(0.0, 0.0, cfg.gnomon_height))


def _horizon_components(lat: float, state: SolarState) -> tuple[float, float, float]:
    # (east, north, up) components of the unit vector toward the sun
    sl, cl = sincosd(lat)
    sd, cd = sincosd(state.declination)
    sh, ch = sincosd(state.hour_angle)
    up = sl * sd + cl * cd * ch
    north = cl * sd - sl * cd * ch
    east = -cd * sh
    return east, north, up


def sin_altitude(lat: float, state: SolarState) -> float:
    return _horizon_components(lat, state)[2]


def solar_altitude(lat: float, state: SolarState) -> float:
    """Altitude of the sun above the horizon, degrees in [-90, 90].

    Equal to asin(sin lat sin d + cos lat cos d cos H); evaluated through
    atan2 so that it stays accurate near the zenith.
    """
    east, north, up = _horizon_components(lat, state)
    return math.degrees(math.atan2(up, math.hypot(east, north)))


def day_boundaries(lat: float, decl: float) -> DayBoundaries:
    """Sunrise/sunset from cos H0 = -tan(lat) tan(decl), or a polar regime."""
    sl, cl = sincosd(lat)
    sd, cd = sincosd(decl)
    num = -sl * sd
    den = cl * cd
    if den == 0.0:
        # pole (or |decl| = 90): t is +/-inf unless the numerator vanishes too
        if num == 0.0:
            raise DegenerateGeometry(f"tan(lat)*tan(decl) undefined at lat={lat}, decl={decl}")
        return DayBoundaries(DayKind.POLAR_NIGHT if num > 0 else DayKind.POLAR_DAY)
    t = num / den
    if t < -1.0:
        return DayBoundaries(DayKind.POLAR_DAY)
    if t > 1.0:
        return DayBoundaries(DayKind.POLAR_NIGHT)
    h0 = math.degrees(math.acos(t))
    return DayBoundaries(DayKind.NORMAL, 12.0 - h0 / 15.0, 12.0 + h0 / 15.0, h0)


def polar_gnomon_hour_angle(lat: float, hour_angle: float) -> float:
    """Hour-line angle from the meridian: tan H' = tan H sin(lat), quadrant-correct."""
    h = normalize_hour_angle(hour_angle)
    sl, _ = sincosd(lat)
    if sl == 1.0:
        return h
    sh, ch = sincosd(h)
    return normalize_hour_angle(math.degrees(math.atan2(sh * sl, ch)))


def declination_from_day_of_year(day: int) -> float:
    """Approximate solar declination for a day of the year (about 0.3 deg error).

    Uses d = -23.44 cos(360 (day + 10) / 365.25).  Only meant for convenience
    input; the geometry itself always takes the declination directly.
    """
    if isinstance(day, bool) or int(day) != day or not 1 <= day <= 366:
        raise ValueError(f"day of year must be an integer in 1..366, got {day!r}")
    _, c = sincosd(360.0 * (day + 10) / 365.25)
    return -OBLIQUITY * c
