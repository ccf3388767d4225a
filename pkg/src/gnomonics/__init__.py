"""Vertical-gnomon shadow geometry and horizontal sundial layout."""

from .geometry import Mat3, SingularSystem, Vec3, mat_apply, rot_x, rot_z, solve_shadow_system
from .shadow import (
    ConicClass,
    ConicCoefficients,
    DayTrajectory,
    ShadowPoint,
    arab_formula_y,
    branch_residual,
    classify_conic,
    conic_coefficients,
    north_pole_radius,
    sample_trajectory,
    shadow_tip_parametric,
)
from .solar import (
    DayBoundaries,
    DayKind,
    DegenerateGeometry,
    ObserverConfig,
    SolarState,
    day_boundaries,
    declination_from_day_of_year,
    gnomon_vector,
    polar_gnomon_hour_angle,
    solar_altitude,
    sun_direction,
)

__version__ = "0.1.0"
