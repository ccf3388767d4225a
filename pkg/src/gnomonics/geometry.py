"""Small exact-semantics 3D linear algebra for the shadow construction.

Angles passed to the rotation constructors are in degrees.  Sines and cosines
are evaluated with argument reduction in degrees, so quarter turns are exact
(``rot_x(90)`` has entries that are exactly 0 and +/-1).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

DET_TOL = 1e-12


class SingularSystem(ArithmeticError):
    """Raised when a 3x3 system has (numerically) no unique solution."""


class Vec3(NamedTuple):
    x: float
    y: float
    z: float


class Mat3(NamedTuple):
    """3x3 matrix stored as three row vectors."""

    r1: Vec3
    r2: Vec3
    r3: Vec3

    def __matmul__(self, other):
        if isinstance(other, Mat3):
            return mat_mul(self, other)
        return mat_apply(self, Vec3(*other))


IDENTITY = Mat3(Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0), Vec3(0.0, 0.0, 1.0))


def sincosd(deg: float) -> tuple[float, float]:
    """Return ``(sin, cos)`` of an angle in degrees, exact at multiples of 90."""
    r = math.fmod(deg, 360.0)
    q = round(r / 90.0)
    r -= 90.0 * q
    rad = math.radians(r)
    s, c = math.sin(rad), math.cos(rad)
    q %= 4
    if q == 1:
        s, c = c, -s
    elif q == 2:
        s, c = -s, -c
    elif q == 3:
        s, c = -c, s
    # avoid signed zeros leaking into outputs
    return s + 0.0, c + 0.0


def dot(a: Vec3, b: Vec3) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def norm(v: Vec3) -> float:
    return math.sqrt(dot(v, v))


def add(a: Vec3, b: Vec3) -> Vec3:
    return Vec3(a[0] + b[0], a[1] + b[1], a[2] + b[2])


def scale(k: float, v: Vec3) -> Vec3:
    return Vec3(k * v[0], k * v[1], k * v[2])


def cross(a: Vec3, b: Vec3) -> Vec3:
    return Vec3(
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


@lru_cache(maxsize=1024)
def rot_x(theta: float) -> Mat3:
    """Rotation about the x-axis; rows (1,0,0), (0,c,s), (0,-s,c)."""
    s, c = sincosd(theta)
    return Mat3(Vec3(1.0, 0.0, 0.0), Vec3(0.0, c, s), Vec3(0.0, -s, c))


def rot_z(theta: float) -> Mat3:
    """Rotation about the z-axis; rows (c,s,0), (-s,c,0), (0,0,1)."""
    s, c = sincosd(theta)
    return Mat3(Vec3(c, s, 0.0), Vec3(-s, c, 0.0), Vec3(0.0, 0.0, 1.0))


def mat_apply(m: Mat3, v: Vec3) -> Vec3:
    return Vec3(dot(m.r1, v), dot(m.r2, v), dot(m.r3, v))


def transpose(m: Mat3) -> Mat3:
    return Mat3(
        Vec3(m.r1[0], m.r2[0], m.r3[0]),
        Vec3(m.r1[1], m.r2[1], m.r3[1]),
        Vec3(m.r1[2], m.r2[2], m.r3[2]),
    )


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    bt = transpose(b)
    return Mat3(*(Vec3(*(dot(row, col) for col in bt)) for row in a))


def det(m: Mat3) -> float:
    return dot(m.r1, cross(m.r2, m.r3))


def solve3(m: Mat3, b: Vec3, tol: float = DET_TOL) -> Vec3:
    """Solve ``m @ u = b`` by Cramer's rule.

    Raises SingularSystem if ``|det(m)| < tol``.
    """
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = m
    b1, b2, b3 = b
    # cofactors shared by the column-1 and column-2/3 replacements
    c1 = a22 * a33 - a23 * a32
    c2 = a23 * a31 - a21 * a33
    c3 = a21 * a32 - a22 * a31
    d = a11 * c1 + a12 * c2 + a13 * c3
    if not abs(d) >= tol:
        raise SingularSystem(f"determinant {d!r} below tolerance {tol!r}")
    d1 = b1 * c1 + a12 * (b3 * a23 - b2 * a33) + a13 * (b2 * a32 - b3 * a22)
    d2 = a11 * (b2 * a33 - b3 * a23) + b1 * c2 + a13 * (b3 * a21 - b2 * a31)
    d3 = a11 * (a22 * b3 - a32 * b2) + a12 * (a31 * b2 - a21 * b3) + b1 * c3
    return Vec3(d1 / d, d2 / d, d3 / d)


def dial_tilt(lat: float) -> Mat3:
    """Map from dial-plane coordinates to the equatorial frame at latitude ``lat``.

    This is ``rot_x(lat - 90)``: (0,0,h) goes to (0, -h cos lat, h sin lat) and
    (x, y, 0) goes to (x, y sin lat, y cos lat).
    """
    return rot_x(lat - 90.0)


@lru_cache(maxsize=256)
def _plane_columns(lat: float) -> tuple[Vec3, Vec3]:
    tilt = dial_tilt(lat)
    ex = mat_apply(tilt, Vec3(1.0, 0.0, 0.0))
    ey = mat_apply(tilt, Vec3(0.0, 1.0, 0.0))
    return scale(-1.0, ex), scale(-1.0, ey)


def solve_shadow_system(ray_dir: Vec3, gnomon_tip: Vec3, lat: float) -> tuple[float, float, float]:
    """Intersect the ray ``gnomon_tip + q * ray_dir`` with the dial plane at ``lat``.

    The unknowns ``(q, x, y)`` solve the generic 3x3 system
    ``q * ray_dir - x * ex - y * ey = -gnomon_tip`` where ``ex``/``ey`` span the
    tilted dial plane.  No closed-form shortcut is taken.
    """
    neg_ex, neg_ey = _plane_columns(lat)
    m = transpose(Mat3(Vec3(*ray_dir), neg_ex, neg_ey))
    q, x, y = solve3(m, scale(-1.0, Vec3(*gnomon_tip)))
    return q, x, y
