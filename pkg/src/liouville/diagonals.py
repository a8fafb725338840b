"""Parameter-line rectangles, their diagonals, and the diagonal-energy checks.

A rectangle is given by its center M and half-diagonal (alpha, beta); the two
diagonals are the segments M + t*(alpha, beta) and M + t*(-alpha, beta) for
t in [-1, 1].  On an orthogonal Liouville line element their energies agree
exactly; the gap, the oddness defect of the speed difference, and the
finite-difference diagnostics of the converse direction are all computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalog import SurfaceChart
from .errors import UnsupportedChartError
from .geometry import (Domain, MetricField, ParamCurve, ParamPoint,
                       curve_energy, discrete_energy, quadratic_form)
from .quadrature import QuadratureSpec


@dataclass(frozen=True)
class RectSpec:
    """Rectangle of parameter lines: center M and half-diagonal (alpha, beta)."""

    center: ParamPoint
    half_diagonal: tuple

    def __post_init__(self):
        u0, v0 = self.center
        object.__setattr__(self, "center", ParamPoint(float(u0), float(v0)))
        a, b = self.half_diagonal
        object.__setattr__(self, "half_diagonal", (float(a), float(b)))

    @property
    def conjugate(self) -> tuple:
        a, b = self.half_diagonal
        return (-a, b)

    @property
    def corners(self) -> tuple:
        """(A, B, C, D) = (M+d, M+d~, M-d, M-d~)."""
        u0, v0 = self.center
        a, b = self.half_diagonal
        return (ParamPoint(u0 + a, v0 + b), ParamPoint(u0 - a, v0 + b),
                ParamPoint(u0 - a, v0 - b), ParamPoint(u0 + a, v0 - b))

    def require_inside(self, domain: Domain):
        for corner in self.corners:
            domain.require(*corner)

    def require_nondegenerate(self):
        a, b = self.half_diagonal
        if a == 0.0 or b == 0.0:
            raise ValueError("degenerate rectangle: both half-diagonal components must be nonzero")


@dataclass(frozen=True)
class DiagonalPair:
    d1: ParamCurve
    d2: ParamCurve


def diagonals(rect: RectSpec, domain: Domain | None = None) -> DiagonalPair:
    """Both diagonal segments on t in [-1, 1], with their constant velocities."""
    if domain is not None:
        rect.require_inside(domain)
    return DiagonalPair(
        d1=ParamCurve.line(rect.center, rect.half_diagonal),
        d2=ParamCurve.line(rect.center, rect.conjugate))


def diagonal_energy_gap(metric: MetricField, rect: RectSpec,
                        quad: QuadratureSpec = QuadratureSpec()) -> float:
    """E(d1) - E(d2) for the rectangle's two diagonals under the metric."""
    rect.require_nondegenerate()
    rect.require_inside(metric.domain)
    pair = diagonals(rect)
    return curve_energy(metric, pair.d1, quad) - curve_energy(metric, pair.d2, quad)


def oddness_defect(metric: MetricField, rect: RectSpec, t: float) -> float:
    """f(t) + f(-t) for f = q1 - q2, the squared-speed difference of the diagonals.

    Vanishes identically for orthogonal Liouville metrics; at t = 0 it equals
    8*alpha*beta*g12(M).
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    rect.require_nondegenerate()
    rect.require_inside(metric.domain)
    pair = diagonals(rect)

    def f(s):
        return (quadratic_form(metric, pair.d1.point(s), pair.d1.velocity(s))
                - quadratic_form(metric, pair.d2.point(s), pair.d2.velocity(s)))

    return f(t) + f(-t)


@dataclass(frozen=True)
class ConverseDiagnostics:
    """Finite-difference estimates from the equal-energy hypothesis.

    For a surface whose rectangles all have equal diagonal energies these all
    vanish: g12 at the center, the sum of the mixed partials of g11 and g22,
    and the mixed partial of g11 alone.
    """

    g12_estimate: float
    mixed_sum: float
    mixed_g11: float


def _even_second_derivative(c, h: float) -> float:
    # c is even in t with c(0) known; one Richardson level removes the h^2 term
    c0 = c(0.0)
    d_h = 2.0 * (c(h) - c0) / (h * h)
    d_h2 = 2.0 * (c(0.5 * h) - c0) / (0.25 * h * h)
    return (4.0 * d_h2 - d_h) / 3.0


def converse_diagnostics(metric: MetricField, center, alpha: float, eps: float,
                         h: float = 1e-3) -> ConverseDiagnostics:
    """Square and flattened-rectangle diagnostics at a point.

    ``alpha`` is the square's half-diagonal component, ``eps`` in (0, 1)
    flattens the second rectangle to half-diagonal (alpha, alpha*eps), and
    ``h`` is the finite-difference step in the diagonal parameter.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie strictly between 0 and 1")
    if alpha == 0.0:
        raise ValueError("alpha must be nonzero")
    center = ParamPoint(*center)
    square = RectSpec(center, (alpha, alpha))
    flat = RectSpec(center, (alpha, alpha * eps))
    square.require_inside(metric.domain)
    flat.require_inside(metric.domain)

    def f_of(rect):
        pair = diagonals(rect)

        def f(s):
            return (quadratic_form(metric, pair.d1.point(s), pair.d1.velocity(s))
                    - quadratic_form(metric, pair.d2.point(s), pair.d2.velocity(s)))

        return f

    f1 = f_of(square)
    f2 = f_of(flat)
    g12_estimate = f1(0.0) / (4.0 * alpha * alpha)
    c1 = lambda t: f1(t) + f1(-t)
    c2 = lambda t: f2(t) + f2(-t)
    a4 = alpha ** 4
    mixed_sum = _even_second_derivative(c1, h) / (8.0 * a4)
    mixed_g11 = _even_second_derivative(c2, h) / (8.0 * a4 * eps * (1.0 - eps * eps))
    return ConverseDiagnostics(g12_estimate, mixed_sum, mixed_g11)


def discrete_diagonal_gap(chart: SurfaceChart, rect: RectSpec, k: int) -> float:
    """Difference of the discrete energies of the two image diagonal polygons.

    The diagonals are sampled at k uniform pieces of [-1, 1] and mapped
    through the chart; plane charts only.
    """
    if chart.ambient_dim != 2:
        raise UnsupportedChartError(
            f"discrete diagonal energies are defined for plane charts, not {chart.name!r}")
    if k < 1:
        raise ValueError("k must be a positive integer")
    rect.require_nondegenerate()
    rect.require_inside(chart.domain)
    pair = diagonals(rect)
    ts = np.linspace(-1.0, 1.0, k + 1)
    poly1 = [chart.embed(*pair.d1.point(t)) for t in ts]
    poly2 = [chart.embed(*pair.d2.point(t)) for t in ts]
    return discrete_energy(poly1, -1.0, 1.0) - discrete_energy(poly2, -1.0, 1.0)


def ivory_chords(chart: SurfaceChart, rect: RectSpec) -> tuple:
    """Euclidean lengths of the two image chords |x(A)-x(C)| and |x(B)-x(D)|.

    Straight chords are the geodesics of plane charts, so this is the k = 1
    geodesic-diagonal comparison.
    """
    if chart.ambient_dim != 2:
        raise UnsupportedChartError(
            f"straight chords are geodesics only on plane charts, not {chart.name!r}")
    rect.require_nondegenerate()
    rect.require_inside(chart.domain)
    a, b, c, d = rect.corners
    first = float(np.linalg.norm(chart.embed(*a) - chart.embed(*c)))
    second = float(np.linalg.norm(chart.embed(*b) - chart.embed(*d)))
    return first, second


def random_rectangles(domain: Domain, count: int, rng) -> list:
    """Seeded rectangles with centers in the middle 60% of the domain.

    Half-diagonals take up to 40% of the remaining margin, which guarantees
    corner containment without rejection sampling.
    """
    rects = []
    for _ in range(count):
        mu = rng.uniform(domain.u_min + 0.2 * domain.extent_u,
                         domain.u_max - 0.2 * domain.extent_u)
        mv = rng.uniform(domain.v_min + 0.2 * domain.extent_v,
                         domain.v_max - 0.2 * domain.extent_v)
        margin_u = min(mu - domain.u_min, domain.u_max - mu)
        margin_v = min(mv - domain.v_min, domain.v_max - mv)
        alpha = rng.uniform(0.02, 0.4) * margin_u * rng.choice((-1.0, 1.0))
        beta = rng.uniform(0.02, 0.4) * margin_v * rng.choice((-1.0, 1.0))
        rects.append(RectSpec(ParamPoint(mu, mv), (alpha, beta)))
    return rects
