"""Line elements, curves, and continuous/discrete length and energy.

A metric is a plain triple of coefficient functions over an open rectangle of
parameters.  Everything here is a pure function of its inputs; values are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DomainError, InvalidMetricError, SingularityError
from .quadrature import QuadratureSpec, integrate

ScalarField = Callable[[float, float], float]


class ParamPoint(NamedTuple):
    u: float
    v: float


@dataclass(frozen=True)
class Domain:
    """Open parameter rectangle ]u_min, u_max[ x ]v_min, v_max[."""

    u_min: float
    u_max: float
    v_min: float
    v_max: float

    def __post_init__(self):
        if not (self.u_min < self.u_max and self.v_min < self.v_max):
            raise ValueError("domain bounds must satisfy u_min < u_max and v_min < v_max")

    @property
    def extent_u(self) -> float:
        return self.u_max - self.u_min

    @property
    def extent_v(self) -> float:
        return self.v_max - self.v_min

    def contains(self, u: float, v: float, margin_u: float = 0.0, margin_v: float = 0.0) -> bool:
        return (self.u_min + margin_u < u < self.u_max - margin_u
                and self.v_min + margin_v < v < self.v_max - margin_v)

    def require(self, u, v, margin_u=0.0, margin_v=0.0):
        if not self.contains(u, v, margin_u, margin_v):
            raise DomainError(f"point ({u}, {v}) outside domain "
                              f"]{self.u_min}, {self.u_max}[ x ]{self.v_min}, {self.v_max}[")

    def grid(self, nu: int = 17, nv: int = 17, margin_frac: float = 0.05) -> list[ParamPoint]:
        """Interior grid with a fractional margin from each boundary."""
        us = np.linspace(self.u_min + margin_frac * self.extent_u,
                         self.u_max - margin_frac * self.extent_u, nu)
        vs = np.linspace(self.v_min + margin_frac * self.extent_v,
                         self.v_max - margin_frac * self.extent_v, nv)
        return [ParamPoint(float(u), float(v)) for u in us for v in vs]


@dataclass(frozen=True)
class MetricField:
    """First-fundamental-form coefficients g11, g12, g22 over a domain.

    g21 is g12 by construction.  The field is expected to be positive
    definite on its domain; this is verified wherever grids are sampled.
    """

    g11: ScalarField
    g12: ScalarField
    g22: ScalarField
    domain: Domain

    @classmethod
    def isothermal(cls, factor: ScalarField, domain: Domain) -> "MetricField":
        zero = lambda u, v: 0.0
        return cls(g11=factor, g12=zero, g22=factor, domain=domain)

    @classmethod
    def diagonal(cls, g11: ScalarField, g22: ScalarField, domain: Domain) -> "MetricField":
        zero = lambda u, v: 0.0
        return cls(g11=g11, g12=zero, g22=g22, domain=domain)

    @classmethod
    def liouville(cls, u1: Callable[[float], float], v1: Callable[[float], float],
                  u2: Callable[[float], float], v2: Callable[[float], float],
                  domain: Domain) -> "MetricField":
        """Orthogonal Liouville field (U1(u)+V1(v)) du^2 + (U2(u)+V2(v)) dv^2."""
        return cls.diagonal(lambda u, v: u1(u) + v1(v),
                            lambda u, v: u2(u) + v2(v), domain)

    def matrix(self, u: float, v: float) -> np.ndarray:
        g12 = self.g12(u, v)
        return np.array([[self.g11(u, v), g12], [g12, self.g22(u, v)]])


@dataclass(frozen=True)
class ParamCurve:
    """Differentiable map of [t_a, t_b] into the parameter plane, with velocity.

    Velocities are supplied analytically by constructors; finite differences
    are only a validation device (see ``validate_velocity``).
    """

    point: Callable[[float], ParamPoint]
    velocity: Callable[[float], tuple]
    t_a: float
    t_b: float

    def __post_init__(self):
        if not self.t_a < self.t_b:
            raise ValueError("curve parameter interval must satisfy t_a < t_b")

    @classmethod
    def line(cls, center, delta, t_a: float = -1.0, t_b: float = 1.0) -> "ParamCurve":
        """Segment t -> center + t*delta with constant velocity delta."""
        u0, v0 = center
        du, dv = delta
        return cls(point=lambda t: ParamPoint(u0 + t * du, v0 + t * dv),
                   velocity=lambda t: (du, dv), t_a=t_a, t_b=t_b)


def validate_velocity(curve: ParamCurve, samples: int = 9, tol: float = 1e-5,
                      h: float = 1e-6) -> float:
    """Check the stored velocity against finite differences of the map.

    Returns the largest deviation found; raises ValueError above ``tol``.
    """
    span = curve.t_b - curve.t_a
    worst = 0.0
    for i in range(samples):
        t = curve.t_a + (i + 0.5) / samples * span
        step = h * max(1.0, span)
        pp = curve.point(t + step)
        pm = curve.point(t - step)
        fd = ((pp[0] - pm[0]) / (2 * step), (pp[1] - pm[1]) / (2 * step))
        du, dv = curve.velocity(t)
        worst = max(worst, abs(fd[0] - du), abs(fd[1] - dv))
    if worst > tol:
        raise ValueError(f"stored velocity deviates from map derivative by {worst:.3e}")
    return worst


# ---------------------------------------------------------------------------
# quadratic form, energy, length
# ---------------------------------------------------------------------------

def quadratic_form(metric: MetricField, p, vel) -> float:
    """v^t G(p) v for a parameter point and parameter-plane velocity."""
    u, v = p
    metric.domain.require(u, v)
    du, dv = vel
    return (metric.g11(u, v) * du * du
            + 2.0 * metric.g12(u, v) * du * dv
            + metric.g22(u, v) * dv * dv)


def curve_energy(metric: MetricField, curve: ParamCurve,
                 quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Integral of the squared metric speed of the curve over [t_a, t_b]."""
    def q(t):
        return quadratic_form(metric, curve.point(t), curve.velocity(t))
    return integrate(q, curve.t_a, curve.t_b, quad)


def curve_length(metric: MetricField, curve: ParamCurve,
                 quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Integral of the metric speed of the curve over [t_a, t_b]."""
    def speed(t):
        return math.sqrt(quadratic_form(metric, curve.point(t), curve.velocity(t)))
    return integrate(speed, curve.t_a, curve.t_b, quad)


def discrete_energy(points: Sequence, t_a: float, t_b: float) -> float:
    """Sum of squared chord lengths over the uniform step (t_b - t_a)/m.

    ``points`` are image points (any fixed dimension) sampled at uniform
    parameter values; m = len(points) - 1 pieces.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) < 2:
        raise ValueError("discrete energy needs at least two sampled points")
    if not t_a < t_b:
        raise ValueError("discrete energy needs t_a < t_b")
    m = len(pts) - 1
    dt = (t_b - t_a) / m
    chords = np.diff(pts, axis=0)
    return float(np.sum(chords * chords) / dt)


def discrete_length(points: Sequence, t_a: float, t_b: float) -> float:
    """Sum of chord lengths of the sampled polygon."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) < 2:
        raise ValueError("discrete length needs at least two sampled points")
    if not t_a < t_b:
        raise ValueError("discrete length needs t_a < t_b")
    chords = np.diff(pts, axis=0)
    return float(np.sum(np.sqrt(np.sum(chords * chords, axis=1))))


# ---------------------------------------------------------------------------
# line-element classification
# ---------------------------------------------------------------------------

class LineElementClass(Enum):
    GENERAL = "general"
    ORTHOGONAL = "orthogonal"
    ISOTHERMAL = "isothermal"
    ORTHOGONAL_LIOUVILLE = "orthogonal_liouville"
    ISOTHERMAL_LIOUVILLE = "isothermal_liouville"
    CLAIRAUT_U = "clairaut_u"
    CLAIRAUT_V = "clairaut_v"
    LIOUVILLE_U1_V2 = "liouville_U1_V2"
    LIOUVILLE_V1_U2 = "liouville_V1_U2"


# Inclusion order of the classes: each class implies the listed coarser ones.
CLASS_IMPLIES: dict[LineElementClass, frozenset[LineElementClass]] = {
    LineElementClass.GENERAL: frozenset(),
    LineElementClass.ORTHOGONAL: frozenset(),
    LineElementClass.ISOTHERMAL: frozenset({LineElementClass.ORTHOGONAL}),
    LineElementClass.ORTHOGONAL_LIOUVILLE: frozenset({LineElementClass.ORTHOGONAL}),
    LineElementClass.ISOTHERMAL_LIOUVILLE: frozenset({
        LineElementClass.ISOTHERMAL, LineElementClass.ORTHOGONAL_LIOUVILLE,
        LineElementClass.ORTHOGONAL}),
    LineElementClass.CLAIRAUT_U: frozenset({
        LineElementClass.ORTHOGONAL_LIOUVILLE, LineElementClass.ORTHOGONAL}),
    LineElementClass.CLAIRAUT_V: frozenset({
        LineElementClass.ORTHOGONAL_LIOUVILLE, LineElementClass.ORTHOGONAL}),
    LineElementClass.LIOUVILLE_U1_V2: frozenset({
        LineElementClass.ORTHOGONAL_LIOUVILLE, LineElementClass.ORTHOGONAL}),
    LineElementClass.LIOUVILLE_V1_U2: frozenset({
        LineElementClass.ORTHOGONAL_LIOUVILLE, LineElementClass.ORTHOGONAL}),
}

# Classes on which equal diagonal energies are guaranteed.
LIOUVILLE_CLASSES = frozenset({
    LineElementClass.ORTHOGONAL_LIOUVILLE,
    LineElementClass.ISOTHERMAL_LIOUVILLE,
    LineElementClass.CLAIRAUT_U,
    LineElementClass.CLAIRAUT_V,
    LineElementClass.LIOUVILLE_U1_V2,
    LineElementClass.LIOUVILLE_V1_U2,
})

# Most specific first; ties are broken in this order.
_SPECIFICITY = (
    LineElementClass.ISOTHERMAL_LIOUVILLE,
    LineElementClass.CLAIRAUT_U,
    LineElementClass.CLAIRAUT_V,
    LineElementClass.LIOUVILLE_U1_V2,
    LineElementClass.LIOUVILLE_V1_U2,
    LineElementClass.ORTHOGONAL_LIOUVILLE,
    LineElementClass.ISOTHERMAL,
    LineElementClass.ORTHOGONAL,
)


def _sample_fields(metric: MetricField, samples, margin_frac):
    nu, nv = samples
    domain = metric.domain
    hu = domain.extent_u * 1e-4
    hv = domain.extent_v * 1e-4
    # margin must also leave room for the finite-difference stencil
    margin = max(margin_frac, 2.5e-4)
    pts = domain.grid(nu, nv, margin)
    rows = []
    for (u, v) in pts:
        g11 = metric.g11(u, v)
        g12 = metric.g12(u, v)
        g22 = metric.g22(u, v)
        if not (g11 > 0.0 and g11 * g22 - g12 * g12 > 0.0):
            raise InvalidMetricError(
                f"metric not positive definite at ({u}, {v}): g11={g11}, det={g11 * g22 - g12 * g12}")
        du11 = (metric.g11(u + hu, v) - metric.g11(u - hu, v)) / (2 * hu)
        dv11 = (metric.g11(u, v + hv) - metric.g11(u, v - hv)) / (2 * hv)
        du22 = (metric.g22(u + hu, v) - metric.g22(u - hu, v)) / (2 * hu)
        dv22 = (metric.g22(u, v + hv) - metric.g22(u, v - hv)) / (2 * hv)
        mix11 = (metric.g11(u + hu, v + hv) - metric.g11(u + hu, v - hv)
                 - metric.g11(u - hu, v + hv) + metric.g11(u - hu, v - hv)) / (4 * hu * hv)
        mix22 = (metric.g22(u + hu, v + hv) - metric.g22(u + hu, v - hv)
                 - metric.g22(u - hu, v + hv) + metric.g22(u - hu, v - hv)) / (4 * hu * hv)
        rows.append((g11, g12, g22, du11, dv11, du22, dv22, mix11, mix22))
    return np.array(rows)


def line_element_classes(metric: MetricField, samples=(17, 17), tol: float = 1e-6,
                         margin_frac: float = 0.05) -> frozenset:
    """All classification predicates satisfied on the sample grid.

    Identities count as holding when below ``tol`` relative to the largest
    metric coefficient seen on the grid.
    """
    rows = _sample_fields(metric, samples, margin_frac)
    g11, g12, g22, du11, dv11, du22, dv22, mix11, mix22 = (
        np.abs(rows[:, i]) for i in range(9))
    scale = max(float(g11.max()), float(g12.max()), float(g22.max()))
    thresh = tol * scale

    def small(values) -> bool:
        return float(values.max()) <= thresh

    orthogonal = small(g12)
    isothermal = orthogonal and float(np.abs(rows[:, 0] - rows[:, 2]).max()) <= thresh
    liouville = orthogonal and small(mix11) and small(mix22)
    found = set()
    if orthogonal:
        found.add(LineElementClass.ORTHOGONAL)
    if isothermal:
        found.add(LineElementClass.ISOTHERMAL)
    if liouville:
        found.add(LineElementClass.ORTHOGONAL_LIOUVILLE)
    if isothermal and liouville:
        found.add(LineElementClass.ISOTHERMAL_LIOUVILLE)
    if orthogonal and small(dv11) and small(dv22):
        found.add(LineElementClass.CLAIRAUT_U)
    if orthogonal and small(du11) and small(du22):
        found.add(LineElementClass.CLAIRAUT_V)
    if orthogonal and small(dv11) and small(du22):
        found.add(LineElementClass.LIOUVILLE_U1_V2)
    if orthogonal and small(du11) and small(dv22):
        found.add(LineElementClass.LIOUVILLE_V1_U2)
    return frozenset(found)


def classify_line_element(metric: MetricField, samples=(17, 17), tol: float = 1e-6,
                          margin_frac: float = 0.05) -> LineElementClass:
    """Most specific class whose identities hold on the grid within ``tol``."""
    found = line_element_classes(metric, samples, tol, margin_frac)
    for cls in _SPECIFICITY:
        if cls in found:
            return cls
    return LineElementClass.GENERAL


def is_staeckel_decomposition(U, U1, V, V1, metric: MetricField,
                              samples=(9, 9), tol: float = 1e-8,
                              margin_frac: float = 0.05) -> bool:
    """Whether (U, U1, V, V1) realize the metric through the 2x2 determinant form.

    Checks g11 = det/V1, g22 = -det/U1 and g12 = 0 on a grid, where
    det = U(u) V1(v) - V(v) U1(u).
    """
    pts = metric.domain.grid(*samples, margin_frac)
    scale = 0.0
    worst = 0.0
    for (u, v) in pts:
        u1 = U1(u)
        v1 = V1(v)
        if abs(u1) < 1e-14 or abs(v1) < 1e-14:
            raise SingularityError(f"U1/V1 vanish at ({u}, {v})")
        det = U(u) * v1 - V(v) * u1
        g11 = metric.g11(u, v)
        g22 = metric.g22(u, v)
        scale = max(scale, abs(g11), abs(g22))
        worst = max(worst,
                    abs(g11 - det / v1),
                    abs(g22 + det / u1),
                    abs(metric.g12(u, v)))
    return worst <= tol * max(scale, 1.0)
