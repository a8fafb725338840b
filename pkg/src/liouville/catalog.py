"""Named surface charts with their closed-form line elements.

Every chart carries its embedding, its closed-form metric, a default domain
away from coordinate singularities, and the classification its line element
is expected to receive.  Charts are immutable and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import UnknownChartError, UnsupportedChartError
from .geometry import Domain, LineElementClass, MetricField

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SurfaceChart:
    """An embedding of a parameter rectangle into the plane or 3-space.

    ``embed`` may be None for metric-only charts (no closed-form real
    embedding is provided); such charts still classify and verify through
    their metric.
    """

    name: str
    embed: Optional[Callable[[float, float], np.ndarray]]
    metric: MetricField
    expected_class: LineElementClass
    ambient_dim: Optional[int]

    @property
    def domain(self) -> Domain:
        return self.metric.domain


def _chart_cartesian():
    dom = Domain(-2.0, 2.0, -2.0, 2.0)
    return SurfaceChart(
        name="cartesian",
        embed=lambda u, v: np.array([u, v]),
        metric=MetricField.isothermal(lambda u, v: 1.0, dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=2)


def _chart_polar_log():
    dom = Domain(-1.0, 1.0, 0.0, TWO_PI)
    return SurfaceChart(
        name="polar_log",
        embed=lambda u, v: np.array([math.exp(u) * math.cos(v), math.exp(u) * math.sin(v)]),
        metric=MetricField.isothermal(lambda u, v: math.exp(2.0 * u), dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=2)


def _chart_parabolic():
    # the metric degenerates only at the origin; u_min > 0 keeps it away
    dom = Domain(0.1, 2.5, -0.5, 2.5)
    return SurfaceChart(
        name="parabolic",
        embed=lambda u, v: np.array([u * u - v * v, 2.0 * u * v]),
        metric=MetricField.isothermal(lambda u, v: 4.0 * (u * u + v * v), dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=2)


def _chart_elliptic_plane():
    dom = Domain(0.1, 2.0, 0.1, 2.0)
    return SurfaceChart(
        name="elliptic_plane",
        embed=lambda u, v: np.array([math.cos(u) * math.cosh(v), -math.sin(u) * math.sinh(v)]),
        metric=MetricField.isothermal(
            lambda u, v: 0.5 * (math.cosh(2.0 * v) - math.cos(2.0 * u)), dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=2)


def _chart_polar_standard():
    dom = Domain(0.1, 2.0, 0.0, TWO_PI)
    return SurfaceChart(
        name="polar_standard",
        embed=lambda u, v: np.array([u * math.cos(v), u * math.sin(v)]),
        metric=MetricField.diagonal(lambda u, v: 1.0, lambda u, v: u * u, dom),
        expected_class=LineElementClass.CLAIRAUT_U,
        ambient_dim=2)


def _chart_plane_u2_v5():
    # degenerates at u = 0 or v = 0, hence the offset domain
    dom = Domain(0.1, 2.0, 0.1, 2.0)
    return SurfaceChart(
        name="plane_u2_v5",
        embed=lambda u, v: np.array([v ** 5, u * u]),
        metric=MetricField.diagonal(lambda u, v: 4.0 * u * u,
                                    lambda u, v: 25.0 * v ** 8, dom),
        expected_class=LineElementClass.LIOUVILLE_U1_V2,
        ambient_dim=2)


def _chart_sphere_rotation():
    dom = Domain(-0.5 * math.pi + 0.1, 0.5 * math.pi - 0.1, 0.0, TWO_PI)
    return SurfaceChart(
        name="sphere_rotation",
        embed=lambda u, v: np.array([math.cos(u) * math.cos(v),
                                     math.cos(u) * math.sin(v),
                                     math.sin(u)]),
        metric=MetricField.diagonal(lambda u, v: 1.0,
                                    lambda u, v: math.cos(u) ** 2, dom),
        expected_class=LineElementClass.CLAIRAUT_U,
        ambient_dim=3)


def _chart_sphere_mercator():
    dom = Domain(-2.0, 2.0, 0.0, TWO_PI)
    return SurfaceChart(
        name="sphere_mercator",
        embed=lambda u, v: np.array([math.cos(v) / math.cosh(u),
                                     math.sin(v) / math.cosh(u),
                                     math.tanh(u)]),
        metric=MetricField.isothermal(lambda u, v: 1.0 / math.cosh(u) ** 2, dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=3)


def _chart_sphere_elliptic():
    # Confocal geodesic-ellipse coordinates at parameter m = 1/2.  The real
    # conformal factor is (sc^2(u) + sn^2(v))/2; no real closed-form embedding
    # is carried (the classical one needs imaginary arguments), so the chart
    # is metric-only.
    from .elliptic import jacobi_standard

    def factor(u, v):
        sn_u, cn_u, _ = jacobi_standard(u, 0.5)
        sn_v, _, _ = jacobi_standard(v, 0.5)
        sc_u = sn_u / cn_u
        return 0.5 * (sc_u * sc_u + sn_v * sn_v)

    dom = Domain(0.1, 1.6, 0.1, 3.0)
    return SurfaceChart(
        name="sphere_elliptic",
        embed=None,
        metric=MetricField.isothermal(factor, dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=None)


def _chart_pseudosphere_rotation():
    # tractroid; metric induced by the embedding: tanh^2 du^2 + sech^2 dv^2
    dom = Domain(0.5, 3.0, 0.0, TWO_PI)
    return SurfaceChart(
        name="pseudosphere_rotation",
        embed=lambda u, v: np.array([math.cos(v) / math.cosh(u),
                                     math.sin(v) / math.cosh(u),
                                     u - math.tanh(u)]),
        metric=MetricField.diagonal(lambda u, v: math.tanh(u) ** 2,
                                    lambda u, v: 1.0 / math.cosh(u) ** 2, dom),
        expected_class=LineElementClass.CLAIRAUT_U,
        ambient_dim=3)


def _chart_pseudosphere_isothermal():
    dom = Domain(1.1, 5.0, 0.0, TWO_PI)
    return SurfaceChart(
        name="pseudosphere_isothermal",
        embed=lambda u, v: np.array([
            math.cos(v) / u,
            math.sin(v) / u,
            math.acosh(u) - math.sqrt(u * u - 1.0) / u]),
        metric=MetricField.isothermal(lambda u, v: 1.0 / (u * u), dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=3)


def _chart_parabolic_cylinder_translation():
    # g22 = 8 v^2 degenerates at v = 0, hence the offset v-range
    dom = Domain(-2.0, 2.0, 0.1, 2.0)
    return SurfaceChart(
        name="parabolic_cylinder_translation",
        embed=lambda u, v: np.array([u, u * u + v * v, u * u - v * v]),
        metric=MetricField.diagonal(lambda u, v: 1.0 + 8.0 * u * u,
                                    lambda u, v: 8.0 * v * v, dom),
        expected_class=LineElementClass.LIOUVILLE_U1_V2,
        ambient_dim=3)


def _chart_parabolic_cylinder_simple():
    dom = Domain(-2.0, 2.0, -2.0, 2.0)
    return SurfaceChart(
        name="parabolic_cylinder_simple",
        embed=lambda u, v: np.array([u, v, u * u]),
        metric=MetricField.diagonal(lambda u, v: 1.0 + 4.0 * u * u,
                                    lambda u, v: 1.0, dom),
        expected_class=LineElementClass.CLAIRAUT_U,
        ambient_dim=3)


def _chart_plane_translation():
    dom = Domain(-2.0, 2.0, -2.0, 2.0)
    return SurfaceChart(
        name="plane_translation",
        embed=lambda u, v: np.array([u, u + v, u - v]),
        metric=MetricField.diagonal(lambda u, v: 3.0, lambda u, v: 2.0, dom),
        expected_class=LineElementClass.CLAIRAUT_U,
        ambient_dim=3)


def _chart_enneper_polynomial():
    # isothermal but not of Liouville form: the counterexample chart
    dom = Domain(-2.0, 2.0, -2.0, 2.0)
    return SurfaceChart(
        name="enneper_polynomial",
        embed=lambda u, v: np.array([
            v * (-3.0 * u * u + v * v + 3.0),
            u * (u * u - 3.0 * v * v + 3.0),
            6.0 * u * v]),
        metric=MetricField.isothermal(
            lambda u, v: 9.0 * (1.0 + u * u + v * v) ** 2, dom),
        expected_class=LineElementClass.ISOTHERMAL,
        ambient_dim=3)


def _chart_enneper_isothermal_clairaut():
    dom = Domain(-1.0, 1.0, 0.0, TWO_PI)

    def embed(u, v):
        eu = math.exp(u)
        e2u = math.exp(2.0 * u)
        return np.array([
            -eu * math.sin(v) * (2.0 * e2u * math.cos(2.0 * v) + e2u - 3.0),
            eu * math.cos(v) * (2.0 * e2u * math.cos(2.0 * v) - e2u + 3.0),
            3.0 * e2u * math.sin(2.0 * v)])

    return SurfaceChart(
        name="enneper_isothermal_clairaut",
        embed=embed,
        metric=MetricField.isothermal(
            lambda u, v: 9.0 * math.exp(2.0 * u) * (1.0 + math.exp(2.0 * u)) ** 2, dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=3)


def _chart_helicoid_catenoid(t: float = 0.0):
    if not 0.0 <= t <= 1.0:
        raise ValueError("helicoid_catenoid family parameter t must lie in [0, 1]")
    half_pi_t = 0.5 * math.pi * t
    dom = Domain(-1.0, 1.0, 0.0, TWO_PI)

    def embed(u, v):
        em = math.exp(-u)
        ep = math.exp(u)
        return np.array([
            -em * math.sin(half_pi_t - v) - 4.0 * ep * math.sin(half_pi_t + v),
            em * math.cos(half_pi_t - v) - 4.0 * ep * math.cos(half_pi_t + v),
            -4.0 * (u * math.sin(half_pi_t) + v * math.cos(half_pi_t))])

    # metric of the associated family does not depend on t
    return SurfaceChart(
        name="helicoid_catenoid",
        embed=embed,
        metric=MetricField.isothermal(
            lambda u, v: math.exp(-2.0 * u) + 16.0 * math.exp(2.0 * u) + 8.0, dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=3)


def _chart_ellipsoid_curvature_lines(axes=(3.0, 2.0, 1.0)):
    from .ellipsoid import EllipsoidAxes, curvature_line_chart
    return curvature_line_chart(EllipsoidAxes(*axes))


_BUILDERS = {
    "cartesian": _chart_cartesian,
    "polar_log": _chart_polar_log,
    "parabolic": _chart_parabolic,
    "elliptic_plane": _chart_elliptic_plane,
    "polar_standard": _chart_polar_standard,
    "plane_u2_v5": _chart_plane_u2_v5,
    "sphere_rotation": _chart_sphere_rotation,
    "sphere_mercator": _chart_sphere_mercator,
    "sphere_elliptic": _chart_sphere_elliptic,
    "pseudosphere_rotation": _chart_pseudosphere_rotation,
    "pseudosphere_isothermal": _chart_pseudosphere_isothermal,
    "parabolic_cylinder_translation": _chart_parabolic_cylinder_translation,
    "parabolic_cylinder_simple": _chart_parabolic_cylinder_simple,
    "plane_translation": _chart_plane_translation,
    "enneper_polynomial": _chart_enneper_polynomial,
    "enneper_isothermal_clairaut": _chart_enneper_isothermal_clairaut,
    "helicoid_catenoid": _chart_helicoid_catenoid,
    "ellipsoid_curvature_lines": _chart_ellipsoid_curvature_lines,
}


def chart_names() -> tuple:
    """All published chart names, in catalog order."""
    return tuple(_BUILDERS)


def catalog(name: str, **params) -> SurfaceChart:
    """Look up a chart by name.

    Parametric families take keyword parameters: ``t`` for
    helicoid_catenoid (in [0, 1]) and ``axes`` for ellipsoid_curvature_lines
    (semi-axes with 0 < c < b < a).
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownChartError(name) from None
    return builder(**params)


# ---------------------------------------------------------------------------
# induced-metric verification
# ---------------------------------------------------------------------------

def induced_metric(chart: SurfaceChart, p, h: float = 1e-5) -> np.ndarray:
    """First fundamental form from central differences of the embedding."""
    if chart.embed is None:
        raise UnsupportedChartError(f"chart {chart.name!r} has no embedding")
    u, v = p
    chart.domain.require(u, v, margin_u=h, margin_v=h)
    xu = (chart.embed(u + h, v) - chart.embed(u - h, v)) / (2.0 * h)
    xv = (chart.embed(u, v + h) - chart.embed(u, v - h)) / (2.0 * h)
    g11 = float(xu @ xu)
    g12 = float(xu @ xv)
    g22 = float(xv @ xv)
    return np.array([[g11, g12], [g12, g22]])


@dataclass(frozen=True)
class ChartMetricCheck:
    name: str
    max_deviation: float
    tol: float
    passed: bool
    note: str = ""


def check_chart_metric(chart: SurfaceChart, tol: float = 1e-6,
                       samples=(7, 7), h: float = 1e-5) -> ChartMetricCheck:
    """Largest |induced - stored| metric entry over an interior grid."""
    if chart.embed is None:
        return ChartMetricCheck(chart.name, 0.0, tol, True, "metric-only chart, skipped")
    worst = 0.0
    for p in chart.domain.grid(*samples, margin_frac=0.05):
        induced = induced_metric(chart, p, h)
        stored = chart.metric.matrix(p.u, p.v)
        worst = max(worst, float(np.max(np.abs(induced - stored))))
    return ChartMetricCheck(chart.name, worst, tol, worst <= tol)


def verify_catalog_metrics(tol: float = 1e-6, samples=(7, 7),
                           h: float = 5e-6) -> list:
    """Check every catalog chart's stored metric against its embedding."""
    return [check_chart_metric(catalog(name), tol, samples, h)
            for name in chart_names()]
