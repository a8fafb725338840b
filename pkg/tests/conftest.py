import pytest

from liouville import EllipsoidAxes, forward_maps

# catalog charts whose line elements are of Liouville/Clairaut type, i.e. on
# which the equal-diagonal-energy statement must hold
LIOUVILLE_CHART_NAMES = (
    "cartesian", "polar_log", "parabolic", "elliptic_plane", "polar_standard",
    "plane_u2_v5", "sphere_rotation", "sphere_mercator", "sphere_elliptic",
    "pseudosphere_rotation", "pseudosphere_isothermal",
    "parabolic_cylinder_translation", "parabolic_cylinder_simple",
    "plane_translation", "enneper_isothermal_clairaut", "helicoid_catenoid",
)


@pytest.fixture(scope="session")
def axes321():
    return EllipsoidAxes(3.0, 2.0, 1.0)


@pytest.fixture(scope="session")
def tables321(axes321):
    return forward_maps(axes321)
