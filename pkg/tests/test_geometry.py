import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gnomonics.geometry import (
    IDENTITY,
    SingularSystem,
    Vec3,
    det,
    mat_apply,
    mat_mul,
    rot_x,
    rot_z,
    sincosd,
    solve3,
    solve_shadow_system,
    transpose,
)

angles = st.floats(min_value=-720.0, max_value=720.0, allow_nan=False)


def assert_mat_close(a, b, tol):
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            assert abs(x - y) <= tol, (a, b)


def assert_vec_close(a, b, tol):
    assert all(abs(x - y) <= tol for x, y in zip(a, b)), (a, b)


@pytest.mark.parametrize("deg", [0, 90, 180, 270, 360, -90, -180, 450])
def test_sincosd_exact_at_quarter_turns(deg):
    s, c = sincosd(deg)
    rad = math.radians(deg)
    assert s == round(math.sin(rad)) and c == round(math.cos(rad))


@given(angles)
def test_sincosd_matches_math(deg):
    s, c = sincosd(deg)
    assert math.isclose(s, math.sin(math.radians(deg)), abs_tol=1e-15)
    assert math.isclose(c, math.cos(math.radians(deg)), abs_tol=1e-15)


def test_rotations_at_zero_are_identity():
    assert rot_x(0) == IDENTITY
    assert rot_z(0) == IDENTITY


def test_rot_x_seed_vector():
    d = 23.44
    got = mat_apply(rot_x(d), Vec3(0, 1, 0))
    assert_vec_close(got, (0, math.cos(math.radians(d)), -math.sin(math.radians(d))), 1e-15)


def test_rot_x_quarter_turn():
    # row 2 is (0, cos, sin), so +z goes to +y and +y goes to -z
    assert_vec_close(mat_apply(rot_x(90), Vec3(0, 0, 1)), (0, 1, 0), 1e-15)
    assert_vec_close(mat_apply(rot_x(90), Vec3(0, 1, 0)), (0, 0, -1), 0.0)


def test_rot_z_convention():
    d, h = math.radians(23.44), math.radians(37.0)
    got = mat_apply(rot_z(37.0), Vec3(0, math.cos(d), -math.sin(d)))
    want = (math.cos(d) * math.sin(h), math.cos(d) * math.cos(h), -math.sin(d))
    assert_vec_close(got, want, 1e-15)
    assert_vec_close(mat_apply(rot_z(180), Vec3(1, 0, 0)), (-1, 0, 0), 1e-15)
    assert_vec_close(mat_apply(rot_z(90), Vec3(1, 0, 0)), (0, -1, 0), 0.0)


def test_mat_apply_identity():
    assert mat_apply(IDENTITY, Vec3(3, 4, 5)) == (3, 4, 5)


def test_matmul_operator():
    m = rot_x(30)
    assert m @ IDENTITY == mat_mul(m, IDENTITY)
    assert m @ (0, 1, 0) == mat_apply(m, Vec3(0, 1, 0))


@given(angles)
def test_rotations_are_proper_orthogonal(theta):
    for m in (rot_x(theta), rot_z(theta)):
        assert_mat_close(mat_mul(transpose(m), m), IDENTITY, 1e-12)
        assert abs(det(m) - 1.0) <= 1e-12


@given(angles, angles)
def test_rotation_group_laws(a, b):
    assert_mat_close(mat_mul(rot_x(a), rot_x(-a)), IDENTITY, 1e-12)
    assert_mat_close(mat_mul(rot_z(a), rot_z(b)), rot_z(a + b), 1e-12)


@given(angles, angles)
def test_rotated_seed_is_unit(a, b):
    v = mat_apply(rot_z(b), mat_apply(rot_x(a), Vec3(0, 1, 0)))
    assert abs(math.sqrt(sum(c * c for c in v)) - 1.0) <= 1e-12


def test_solve3_against_known_solution():
    m = ((2.0, 1.0, -1.0), (-3.0, -1.0, 2.0), (-2.0, 1.0, 2.0))
    assert_vec_close(solve3(m, (8.0, -11.0, -3.0)), (2.0, 3.0, -1.0), 1e-12)


def test_solve3_singular():
    with pytest.raises(SingularSystem):
        solve3(((1, 2, 3), (2, 4, 6), (0, 0, 1)), (1, 2, 3))


def test_shadow_system_zenith_over_pole():
    q, x, y = solve_shadow_system(Vec3(0, 0, -1), Vec3(0, 0, 2.5), 90.0)
    assert (q, x, y) == (2.5, 0.0, 0.0)


def test_shadow_system_mid_latitude_noon():
    lat, decl = 45.0, 23.44
    ray = mat_apply(rot_x(decl), Vec3(0, 1, 0))
    tip = Vec3(0, -math.cos(math.radians(lat)), math.sin(math.radians(lat)))
    q, x, y = solve_shadow_system(ray, tip, lat)
    # oracle: right triangle with the noon altitude 90 - lat + decl
    alt = math.radians(90 - lat + decl)
    assert math.isclose(q, 1 / math.sin(alt), rel_tol=1e-13)
    assert abs(x) < 1e-15
    assert math.isclose(y, 1 / math.tan(alt), rel_tol=1e-13)
    assert abs(q - 1.0753) < 1e-4 and abs(y - 0.3952) < 1e-4


def test_shadow_system_parallel_ray_is_singular():
    # sun on the horizon at the equator, equinox, six hours from noon
    with pytest.raises(SingularSystem):
        solve_shadow_system(mat_apply(rot_z(90), Vec3(0, 1, 0)), Vec3(0, -1, 0), 0.0)


@given(
    st.floats(-89.0, 89.0),
    st.floats(-30.0, 30.0),
    st.floats(-180.0, 180.0),
    st.floats(0.1, 10.0),
)
def test_shadow_system_residuals(lat, decl, hour, h):
    sl, cl = sincosd(lat)
    sd, cd = sincosd(decl)
    sh, ch = sincosd(hour)
    assume(sl * sd + cl * cd * ch > math.sin(math.radians(0.1)))
    ray = Vec3(cd * sh, cd * ch, -sd)
    tip = Vec3(0.0, -h * cl, h * sl)
    q, x, y = solve_shadow_system(ray, tip, lat)
    rows = (
        q * ray[0] + tip[0] - x,
        q * ray[1] + tip[1] - y * sl,
        q * ray[2] + tip[2] - y * cl,
    )
    bound = 1e-10 * max(1.0, abs(q), h)
    assert all(abs(r) < bound for r in rows)
