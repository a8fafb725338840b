"""Diagonal energies of n-rectangles under n-dimensional orthogonal Liouville
metrics ds^2 = sum_k (sum_i U_ik(u_i)) du_k^2.

An n-rectangle is fixed by two opposite vertices; its main diagonals join
opposite vertex pairs, one representative per pair (2^(n-1) of them).  Under
a metric of the form above all main diagonals have the same energy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .errors import InvalidMetricError
from .quadrature import QuadratureSpec, integrate

MAX_DIMENSION = 12


@dataclass(frozen=True)
class NdMetric:
    """Coefficient functions U_ik; the k-th diagonal entry is sum_i U_ik(u_i)."""

    coeffs: tuple  # coeffs[i][k] callables, i, k in 0..n-1

    def __post_init__(self):
        coeffs = tuple(tuple(row) for row in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        n = len(coeffs)
        if n < 2:
            raise ValueError("metric needs dimension at least 2")
        if any(len(row) != n for row in coeffs):
            raise ValueError("coefficient table must be square")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def entry(self, k: int, u: Sequence) -> float:
        value = 0.0
        for i in range(self.dim):
            value += self.coeffs[i][k](u[i])
        if value <= 0.0:
            raise InvalidMetricError(
                f"diagonal metric entry {k} not positive at {tuple(u)}: {value}")
        return value


@dataclass(frozen=True)
class NdRect:
    """n-rectangle fixed by two opposite vertices (degenerate axes allowed)."""

    p0: tuple
    p1: tuple

    def __post_init__(self):
        p0 = tuple(float(x) for x in self.p0)
        p1 = tuple(float(x) for x in self.p1)
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p1", p1)
        if len(p0) != len(p1):
            raise ValueError("vertices must have the same dimension")
        if len(p0) < 2:
            raise ValueError("rectangle needs dimension at least 2")

    @property
    def dim(self) -> int:
        return len(self.p0)

    @property
    def center(self) -> np.ndarray:
        return 0.5 * (np.array(self.p0) + np.array(self.p1))

    @property
    def half_diagonal(self) -> np.ndarray:
        return 0.5 * (np.array(self.p1) - np.array(self.p0))

    @property
    def degenerate_axes(self) -> tuple:
        return tuple(i for i, d in enumerate(self.half_diagonal) if d == 0.0)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degenerate_axes)


@dataclass(frozen=True)
class NdDiagonal:
    """One main diagonal: t -> center + t * (signs * half_diagonal), t in [-1, 1]."""

    signs: tuple
    center: np.ndarray
    velocity: np.ndarray

    def point(self, t: float) -> np.ndarray:
        return self.center + t * self.velocity


def _sign_vectors(rect: NdRect) -> list:
    """One sign vector per opposite-vertex pair.

    Degenerate axes are pinned to +1 (their sign is immaterial), and the
    first active axis is pinned to +1 to pick one representative per pair.
    """
    n = rect.dim
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} above the enumeration bound {MAX_DIMENSION}")
    active = [i for i in range(n) if i not in rect.degenerate_axes]
    if not active:
        return [tuple([1] * n)]
    free = active[1:]
    vectors = []
    for combo in product((1, -1), repeat=len(free)):
        signs = [1] * n
        for axis, sign in zip(free, combo):
            signs[axis] = sign
        vectors.append(tuple(signs))
    return vectors


def nd_diagonals(rect: NdRect) -> list:
    """The 2^(n-1) main diagonals of the rectangle (fewer when degenerate)."""
    center = rect.center
    delta = rect.half_diagonal
    return [NdDiagonal(signs=s, center=center, velocity=np.array(s) * delta)
            for s in _sign_vectors(rect)]


def nd_diagonal_energies(metric: NdMetric, rect: NdRect,
                         quad: QuadratureSpec = QuadratureSpec()) -> list:
    """Energy of each main diagonal under the metric."""
    if metric.dim != rect.dim:
        raise ValueError("metric and rectangle dimensions differ")
    energies = []
    for diag in nd_diagonals(rect):
        vel2 = diag.velocity * diag.velocity

        def q(t):
            u = diag.point(t)
            return sum(metric.entry(k, u) * vel2[k]
                       for k in range(metric.dim) if vel2[k] != 0.0)

        energies.append(integrate(q, -1.0, 1.0, quad))
    return energies


def nd_energy_gap(metric: NdMetric, rect: NdRect,
                  quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Largest pairwise difference among the diagonal energies."""
    energies = nd_diagonal_energies(metric, rect, quad)
    return max(energies) - min(energies)
