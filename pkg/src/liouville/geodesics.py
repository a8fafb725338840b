"""Geodesics: the first-order field for isothermal Liouville metrics, a fixed
step integrator, and the geodesic-equation residual check for orthogonal
patches.

For a conformal factor U(u) + V(v) and separation constant a, unit-speed
geodesics of the positive branch satisfy

    du/dt = sqrt(U - a) / (U + V),    dv/dt = sqrt(a + V) / (U + V),

with t equal to arc length; (U + V) (u'^2 + v'^2) = 1 holds identically.
Integration stops with a flag when a radicand crosses zero (turning point)
or when the trajectory leaves a supplied domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import TurningPointError
from .geometry import Domain, MetricField, ParamPoint
from .quadrature import gauss_legendre


@dataclass(frozen=True)
class LiouvilleSplit:
    """Conformal factor U(u) + V(v) and the separation constant of the family."""

    U: Callable[[float], float]
    V: Callable[[float], float]
    a_const: float


@dataclass(frozen=True)
class GeodesicPolyline:
    """Integrated trajectory: parameter values, points, and exact field velocities."""

    t: np.ndarray
    points: np.ndarray
    velocities: np.ndarray
    step: float
    status: str  # completed | turning_point | domain_exit

    @property
    def samples(self) -> list:
        return [(float(ti), ParamPoint(*p), (float(w[0]), float(w[1])))
                for ti, p, w in zip(self.t, self.points, self.velocities)]


def liouville_geodesic_field(split: LiouvilleSplit, p) -> tuple:
    """Unit-speed geodesic velocity at a parameter point (positive branch)."""
    u, v = p
    uu = split.U(u)
    vv = split.V(v)
    ru = uu - split.a_const
    rv = split.a_const + vv
    if ru < 0.0 or rv < 0.0:
        raise TurningPointError(
            f"radicand crossed zero at ({u}, {v}): U-a={ru}, a+V={rv}")
    denom = uu + vv
    return math.sqrt(ru) / denom, math.sqrt(rv) / denom


def integrate_liouville_geodesic(split: LiouvilleSplit, start, T: float,
                                 step: Optional[float] = None,
                                 domain: Optional[Domain] = None) -> GeodesicPolyline:
    """Classical fixed-step 4th-order integration of the geodesic field.

    The parameter is arc length.  Stops early (partial polyline, flagged)
    at turning points or on domain exit.
    """
    if T <= 0.0:
        raise ValueError("integration time T must be positive")
    if step is None:
        step = T / 4096.0
    if step <= 0.0:
        raise ValueError("step must be positive")
    n_steps = max(1, round(T / step))
    h = T / n_steps

    u, v = ParamPoint(*start)
    if domain is not None:
        domain.require(u, v)
    ts = [0.0]
    pts = [(u, v)]
    vels = [liouville_geodesic_field(split, (u, v))]
    status = "completed"
    for i in range(n_steps):
        try:
            k1 = liouville_geodesic_field(split, (u, v))
            k2 = liouville_geodesic_field(split, (u + 0.5 * h * k1[0], v + 0.5 * h * k1[1]))
            k3 = liouville_geodesic_field(split, (u + 0.5 * h * k2[0], v + 0.5 * h * k2[1]))
            k4 = liouville_geodesic_field(split, (u + h * k3[0], v + h * k3[1]))
        except TurningPointError:
            status = "turning_point"
            break
        u += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        v += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
        if domain is not None and not domain.contains(u, v):
            status = "domain_exit"
            break
        try:
            vel = liouville_geodesic_field(split, (u, v))
        except TurningPointError:
            status = "turning_point"
            break
        ts.append((i + 1) * h)
        pts.append((u, v))
        vels.append(vel)
    return GeodesicPolyline(t=np.array(ts), points=np.array(pts),
                            velocities=np.array(vels), step=h, status=status)


def geodesic_residual(metric: MetricField, poly: GeodesicPolyline,
                      h: float = 1e-5) -> tuple:
    """Max residuals of the two geodesic equations along the polyline.

    Assumes an orthogonal patch (g12 = 0).  Metric partials use central
    differences with step ``h``; trajectory second derivatives use central
    differences of the stored velocities, so the result is dominated by the
    O(dt^2) differencing error of the polyline spacing.
    """
    n = len(poly.t)
    if n < 3:
        raise ValueError("residual check needs at least three samples")
    worst1 = 0.0
    worst2 = 0.0
    for i in range(1, n - 1):
        u, v = poly.points[i]
        metric.domain.require(u, v, margin_u=h, margin_v=h)
        du, dv = poly.velocities[i]
        dt = poly.t[i + 1] - poly.t[i - 1]
        ddu = (poly.velocities[i + 1, 0] - poly.velocities[i - 1, 0]) / dt
        ddv = (poly.velocities[i + 1, 1] - poly.velocities[i - 1, 1]) / dt
        g11 = metric.g11(u, v)
        g22 = metric.g22(u, v)
        du_g11 = (metric.g11(u + h, v) - metric.g11(u - h, v)) / (2.0 * h)
        dv_g11 = (metric.g11(u, v + h) - metric.g11(u, v - h)) / (2.0 * h)
        du_g22 = (metric.g22(u + h, v) - metric.g22(u - h, v)) / (2.0 * h)
        dv_g22 = (metric.g22(u, v + h) - metric.g22(u, v - h)) / (2.0 * h)
        r1 = 2.0 * g11 * ddu + du_g11 * du * du + 2.0 * dv_g11 * du * dv - du_g22 * dv * dv
        r2 = 2.0 * g22 * ddv - dv_g11 * du * du + 2.0 * du_g22 * du * dv + dv_g22 * dv * dv
        worst1 = max(worst1, abs(r1))
        worst2 = max(worst2, abs(r2))
    return worst1, worst2


def unit_speed_defect(split: LiouvilleSplit, poly: GeodesicPolyline) -> float:
    """Max |(U + V)(u'^2 + v'^2) - 1| over the polyline (an algebraic identity)."""
    worst = 0.0
    for (u, v), (du, dv) in zip(poly.points, poly.velocities):
        factor = split.U(u) + split.V(v)
        worst = max(worst, abs(factor * (du * du + dv * dv) - 1.0))
    return worst


def polyline_metric_length(metric: MetricField, poly: GeodesicPolyline,
                           order: int = 16) -> float:
    """Metric length of the cubic-Hermite interpolation of the polyline.

    Each step is resampled with its endpoint positions and velocities, so the
    result is independent of the arc-length property of the parametrization.
    """
    total = 0.0
    for i in range(len(poly.t) - 1):
        dt = poly.t[i + 1] - poly.t[i]
        p0 = poly.points[i]
        p1 = poly.points[i + 1]
        v0 = poly.velocities[i] * dt
        v1 = poly.velocities[i + 1] * dt

        def speed(tau):
            # Hermite basis on [0, 1]
            h00 = (1.0 + 2.0 * tau) * (1.0 - tau) ** 2
            h10 = tau * (1.0 - tau) ** 2
            h01 = tau * tau * (3.0 - 2.0 * tau)
            h11 = tau * tau * (tau - 1.0)
            point = h00 * p0 + h10 * v0 + h01 * p1 + h11 * v1
            d00 = 6.0 * tau * (tau - 1.0)
            d10 = (1.0 - tau) * (1.0 - 3.0 * tau)
            d01 = -d00
            d11 = tau * (3.0 * tau - 2.0)
            deriv = (d00 * p0 + d10 * v0 + d01 * p1 + d11 * v1) / dt
            u, v = point
            q = (metric.g11(u, v) * deriv[0] ** 2
                 + 2.0 * metric.g12(u, v) * deriv[0] * deriv[1]
                 + metric.g22(u, v) * deriv[1] ** 2)
            return math.sqrt(max(q, 0.0))

        total += dt * gauss_legendre(speed, 0.0, 1.0, order)
    return total
