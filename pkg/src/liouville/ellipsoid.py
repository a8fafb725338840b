"""Triaxial ellipsoid: curvature-line chart and its conformal reparametrization.

The curvature-line coordinates (u, v) with c^2 < v < b^2 < u < a^2 carry the
orthogonal metric (u-v) f(u) du^2 - (u-v) f(v) dv^2 with the rational weight
f(t) = t / (4 (a^2-t)(b^2-t)(c^2-t)).  Integrating sqrt(+-f) gives strictly
increasing maps X(u), Y(v) whose inverses U, V turn the chart isothermal with
conformal factor U(x) - V(y).  The endpoint singularities of sqrt(f) are
removed by the square-root substitutions t = b^2 + s^2, t = a^2 - s^2 (and the
analogous ones for Y), after which every integrand is analytic and fixed-order
Gauss-Legendre converges spectrally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.interpolate import PchipInterpolator

from .catalog import SurfaceChart
from .errors import DomainError, SingularityError
from .geometry import Domain, LineElementClass, MetricField
from .quadrature import gauss_legendre


@dataclass(frozen=True)
class EllipsoidAxes:
    """Semi-axes with 0 < c < b < a."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not 0.0 < self.c < self.b < self.a:
            raise ValueError("semi-axes must satisfy 0 < c < b < a")

    @property
    def a2(self) -> float:
        return self.a * self.a

    @property
    def b2(self) -> float:
        return self.b * self.b

    @property
    def c2(self) -> float:
        return self.c * self.c


def weight_f(axes: EllipsoidAxes, t: float) -> float:
    """Rational weight t / (4 (a^2-t)(b^2-t)(c^2-t)).

    Positive on (b^2, a^2), negative on (c^2, b^2); simple poles at the
    squared semi-axes.
    """
    denom = 4.0 * (axes.a2 - t) * (axes.b2 - t) * (axes.c2 - t)
    if denom == 0.0:
        raise SingularityError(f"weight has a pole at t = {t}")
    return t / denom


def curvature_line_embed(axes: EllipsoidAxes, u: float, v: float) -> np.ndarray:
    """Curvature-line parametrization with c^2 < v < b^2 < u < a^2."""
    a2, b2, c2 = axes.a2, axes.b2, axes.c2
    if not c2 < v < b2 < u < a2:
        raise DomainError(f"(u, v) = ({u}, {v}) violates c^2 < v < b^2 < u < a^2")
    x1 = math.sqrt(a2 * (a2 - u) * (a2 - v) / ((a2 - b2) * (a2 - c2)))
    x2 = math.sqrt(b2 * (b2 - u) * (b2 - v) / ((b2 - c2) * (b2 - a2)))
    x3 = math.sqrt(c2 * (c2 - u) * (c2 - v) / ((c2 - a2) * (c2 - b2)))
    return np.array([x1, x2, x3])


def curvature_line_chart(axes: EllipsoidAxes, margin_scale: float = 1e-3) -> SurfaceChart:
    """Catalog chart for the curvature-line coordinates (orthogonal, not Liouville)."""
    eps = margin_scale * (axes.a2 - axes.c2)
    dom = Domain(axes.b2 + eps, axes.a2 - eps, axes.c2 + eps, axes.b2 - eps)
    return SurfaceChart(
        name="ellipsoid_curvature_lines",
        embed=lambda u, v: curvature_line_embed(axes, u, v),
        metric=MetricField.diagonal(
            lambda u, v: (u - v) * weight_f(axes, u),
            lambda u, v: -(u - v) * weight_f(axes, v), dom),
        expected_class=LineElementClass.ORTHOGONAL,
        ambient_dim=3)


# ---------------------------------------------------------------------------
# forward maps X(u), Y(v) with singularity-removing substitutions
# ---------------------------------------------------------------------------

def _x_integrand_left(axes: EllipsoidAxes, t: float) -> float:
    # sqrt(f(t)) dt = [sqrt(t) / sqrt((a2-t)(t-c2))] ds under t = b2 + s^2
    return math.sqrt(t) / math.sqrt((axes.a2 - t) * (t - axes.c2))


def _x_integrand_right(axes: EllipsoidAxes, t: float) -> float:
    # sqrt(f(t)) dt = [sqrt(t) / sqrt((t-b2)(t-c2))] ds under t = a2 - s^2
    return math.sqrt(t) / math.sqrt((t - axes.b2) * (t - axes.c2))


def _y_integrand_left(axes: EllipsoidAxes, t: float) -> float:
    # sqrt(-f(t)) dt = [sqrt(t) / sqrt((a2-t)(b2-t))] ds under t = c2 + s^2
    return math.sqrt(t) / math.sqrt((axes.a2 - t) * (axes.b2 - t))


def _y_integrand_right(axes: EllipsoidAxes, t: float) -> float:
    # sqrt(-f(t)) dt = [sqrt(t) / sqrt((a2-t)(t-c2))] ds under t = b2 - s^2
    return math.sqrt(t) / math.sqrt((axes.a2 - t) * (t - axes.c2))


class ConformalTables:
    """Monotone tables for the forward maps and their refined inverses.

    ``u_of_x``/``v_of_y`` refine a monotone-cubic initial guess with
    safeguarded Newton steps (the derivative is the reciprocal square-root of
    the weight, from the defining differential equations), reaching round-trip
    residuals near 1e-13.  ``u_of_x_fast``/``v_of_y_fast`` evaluate the
    interpolant only; they are what the conformal chart's metric uses, which
    keeps the metric exactly of Liouville form.
    """

    def __init__(self, axes: EllipsoidAxes, points: int = 512, gl_order: int = 48):
        if points < 16:
            raise ValueError("table needs at least 16 grid points")
        if gl_order < 8:
            raise ValueError("quadrature order must be at least 8")
        self.axes = axes
        self._points = points
        self._order = gl_order
        a2, b2, c2 = axes.a2, axes.b2, axes.c2
        self._u_mid = 0.5 * (b2 + a2)
        self._v_mid = 0.5 * (c2 + b2)
        self._x_at_mid = gauss_legendre(
            lambda s: _x_integrand_left(axes, b2 + s * s),
            0.0, math.sqrt(self._u_mid - b2), gl_order)
        self._y_at_mid = gauss_legendre(
            lambda s: _y_integrand_left(axes, c2 + s * s),
            0.0, math.sqrt(self._v_mid - c2), gl_order)

        self._u_grid = self._graded_grid(b2, a2, points)
        self._v_grid = self._graded_grid(c2, b2, points)
        self._x_grid = np.array([self.x_of_u(u) for u in self._u_grid])
        self._y_grid = np.array([self.y_of_v(v) for v in self._v_grid])
        self.x_max = float(self._x_grid[-1])
        self.y_max = float(self._y_grid[-1])

        self._u_interp = PchipInterpolator(self._x_grid, self._u_grid)
        self._v_interp = PchipInterpolator(self._y_grid, self._v_grid)

    @staticmethod
    def _graded_grid(lo: float, hi: float, points: int) -> np.ndarray:
        # square-root grading toward both endpoints, matching the
        # substitution variable of the singular integrals
        mid = 0.5 * (lo + hi)
        n_half = points // 2
        s_left = np.linspace(0.0, math.sqrt(mid - lo), n_half + 1)
        left = lo + s_left ** 2
        s_right = np.linspace(math.sqrt(hi - mid), 0.0, points - n_half + 1)
        right = hi - s_right ** 2
        grid = np.concatenate([left, right[1:]])
        return np.unique(grid)

    # -- forward maps -------------------------------------------------------

    def x_of_u(self, u: float, order: int | None = None) -> float:
        """X(u): integral of sqrt(f) from b^2, via smooth substitutions."""
        axes = self.axes
        order = self._order if order is None else order
        b2, a2, mid = axes.b2, axes.a2, self._u_mid
        if not b2 <= u <= a2:
            raise ValueError(f"u = {u} outside [b^2, a^2] = [{b2}, {a2}]")
        if u <= mid:
            return gauss_legendre(lambda s: _x_integrand_left(axes, b2 + s * s),
                                  0.0, math.sqrt(u - b2), order)
        return self._x_at_mid + gauss_legendre(
            lambda s: _x_integrand_right(axes, a2 - s * s),
            math.sqrt(a2 - u), math.sqrt(a2 - mid), order)

    def y_of_v(self, v: float, order: int | None = None) -> float:
        """Y(v): integral of sqrt(-f) from c^2, via smooth substitutions."""
        axes = self.axes
        order = self._order if order is None else order
        c2, b2, mid = axes.c2, axes.b2, self._v_mid
        if not c2 <= v <= b2:
            raise ValueError(f"v = {v} outside [c^2, b^2] = [{c2}, {b2}]")
        if v <= mid:
            return gauss_legendre(lambda s: _y_integrand_left(axes, c2 + s * s),
                                  0.0, math.sqrt(v - c2), order)
        return self._y_at_mid + gauss_legendre(
            lambda s: _y_integrand_right(axes, b2 - s * s),
            math.sqrt(b2 - v), math.sqrt(b2 - mid), order)

    # -- fast interpolated inverses ------------------------------------------

    def u_of_x_fast(self, x: float) -> float:
        return float(self._u_interp(x))

    def v_of_y_fast(self, y: float) -> float:
        return float(self._v_interp(y))

    # -- refined inverses -----------------------------------------------------

    def _invert(self, target, lo, hi, forward, interp, weight_sign) -> float:
        if target <= 0.0:
            if target < -1e-12 * max(1.0, hi - lo):
                raise ValueError(f"inverse argument {target} below 0")
            return lo
        top = forward(hi)
        if target >= top:
            if target > top * (1.0 + 1e-12):
                raise ValueError(f"inverse argument {target} above the map range {top}")
            return hi
        value = float(interp(target))
        value = min(max(value, lo + 1e-15 * (hi - lo)), hi - 1e-15 * (hi - lo))
        blo, bhi = lo, hi
        edge = 8.0 * np.spacing(max(abs(lo), abs(hi), 1.0))
        for _ in range(80):
            residual = forward(value) - target
            if abs(residual) <= 1e-13 * max(1.0, top):
                return value
            if residual > 0.0:
                bhi = min(bhi, value)
            else:
                blo = max(blo, value)
            if bhi - blo <= edge:
                # target sits below the forward map's resolution near an
                # endpoint; return the better bracket end
                if abs(forward(blo) - target) <= abs(forward(bhi) - target):
                    return blo
                return bhi
            if value - lo <= edge or hi - value <= edge:
                candidate = 0.5 * (blo + bhi)  # the weight has poles at lo/hi
            else:
                slope = math.sqrt(abs(weight_sign * weight_f(self.axes, value)))
                candidate = value - residual / slope
                if not blo < candidate < bhi:
                    candidate = 0.5 * (blo + bhi)
            value = candidate
        return value

    def u_of_x(self, x: float) -> float:
        """U(x): refined inverse of X with X(U(x)) = x to ~1e-13; endpoints exact."""
        return self._invert(x, self.axes.b2, self.axes.a2,
                            self.x_of_u, self._u_interp, +1.0)

    def v_of_y(self, y: float) -> float:
        """V(y): refined inverse of Y with Y(V(y)) = y to ~1e-13; endpoints exact."""
        return self._invert(y, self.axes.c2, self.axes.b2,
                            self.y_of_v, self._v_interp, -1.0)


def forward_maps(axes: EllipsoidAxes, points: int = 512,
                 gl_order: int = 48) -> ConformalTables:
    """Build the forward-map tables X, Y and their monotone inverses."""
    return ConformalTables(axes, points, gl_order)


def liouville_chart(axes: EllipsoidAxes, tables: ConformalTables) -> SurfaceChart:
    """The conformal chart (x, y) -> ellipsoid with factor U(x) - V(y).

    The metric reads the interpolation tables directly (so it is exactly of
    Liouville form); the embedding goes through the refined inverses so the
    induced metric reflects the true surface.
    """

    @lru_cache(maxsize=8192)
    def u_exact(x: float) -> float:
        return tables.u_of_x(x)

    @lru_cache(maxsize=8192)
    def v_exact(y: float) -> float:
        return tables.v_of_y(y)

    def embed(x, y):
        return curvature_line_embed(axes, u_exact(x), v_exact(y))

    def factor(x, y):
        return tables.u_of_x_fast(x) - tables.v_of_y_fast(y)

    dom = Domain(0.0, tables.x_max, 0.0, tables.y_max)
    return SurfaceChart(
        name=f"ellipsoid_conformal({axes.a:g},{axes.b:g},{axes.c:g})",
        embed=embed,
        metric=MetricField.isothermal(factor, dom),
        expected_class=LineElementClass.ISOTHERMAL_LIOUVILLE,
        ambient_dim=3)


def gen_sn_cross_check(axes: EllipsoidAxes, y: float,
                       tables: ConformalTables | None = None) -> float:
    """|closed-form V(y) via gen-sn  -  V(y) from table inversion|.

    The closed form inverts Y through the generalized amplitude on the
    all-real branch: V(y) = c^2 / (1 - n2 sn^2(n2; y b sqrt(a^2-c^2)/c^2 | m2))
    with n2 = 1 - c^2/b^2 and m2 = a^2 (b^2 - c^2) / (b^2 (a^2 - c^2)).
    """
    from .elliptic import gen_sn

    if tables is None:
        tables = forward_maps(axes)
    if not 0.0 < y < tables.y_max:
        raise ValueError(f"y = {y} outside (0, y_max = {tables.y_max})")
    a2, b2, c2 = axes.a2, axes.b2, axes.c2
    n2 = 1.0 - c2 / b2
    m2 = a2 * (b2 - c2) / (b2 * (a2 - c2))
    z = y * axes.b * math.sqrt(a2 - c2) / c2
    sn = gen_sn(n2, z, m2)
    v_closed = c2 / (1.0 - n2 * sn * sn)
    v_table = tables.v_of_y(y)
    return abs(v_closed - v_table)
