import math

import numpy as np
import pytest

from liouville import (Domain, DomainError, MetricField, ParamPoint, RectSpec,
                       UnsupportedChartError, catalog, converse_diagnostics,
                       curve_energy, diagonal_energy_gap, diagonals,
                       discrete_diagonal_gap, discrete_energy, ivory_chords,
                       oddness_defect, random_rectangles)

WIDE = Domain(-10.0, 10.0, -10.0, 10.0)
EUCLID = MetricField.isothermal(lambda u, v: 1.0, WIDE)


def test_diagonal_endpoints_are_corners():
    rect = RectSpec(ParamPoint(0.0, 0.0), (1.0, 1.0))
    pair = diagonals(rect, WIDE)
    assert pair.d1.point(1.0) == ParamPoint(1.0, 1.0)    # A
    assert pair.d1.point(-1.0) == ParamPoint(-1.0, -1.0)  # C
    assert pair.d2.point(1.0) == ParamPoint(-1.0, 1.0)   # B
    assert pair.d2.point(-1.0) == ParamPoint(1.0, -1.0)  # D
    assert pair.d1.point(0.0) == pair.d2.point(0.0) == ParamPoint(0.0, 0.0)


def test_diagonals_corner_containment_checked():
    rect = RectSpec(ParamPoint(9.5, 0.0), (1.0, 1.0))
    with pytest.raises(DomainError):
        diagonals(rect, WIDE)


def test_gap_vanishes_on_elliptic_plane():
    metric = catalog("elliptic_plane").metric
    gap = diagonal_energy_gap(metric, RectSpec(ParamPoint(1.0, 1.0), (0.4, 0.3)))
    assert abs(gap) <= 1e-9


def test_gap_enneper_witness_is_twelve():
    metric = catalog("enneper_polynomial").metric
    gap = diagonal_energy_gap(metric, RectSpec(ParamPoint(1.0, 1.0), (0.5, 0.5)))
    assert gap == pytest.approx(12.0, abs=1e-8)


def test_gap_rejects_degenerate_rectangles():
    with pytest.raises(ValueError):
        diagonal_energy_gap(EUCLID, RectSpec(ParamPoint(0.0, 0.0), (0.5, 0.0)))


# ---------------------------------------------------------------------------
# oddness diagnostics
# ---------------------------------------------------------------------------

def test_oddness_defect_vanishes_on_liouville_charts():
    from conftest import LIOUVILLE_CHART_NAMES
    rng = np.random.default_rng(21)
    ts = np.linspace(0.0, 1.0, 5)
    for name in LIOUVILLE_CHART_NAMES:
        metric = catalog(name).metric
        for rect in random_rectangles(metric.domain, 3, rng):
            for t in ts:
                assert abs(oddness_defect(metric, rect, float(t))) <= 1e-9, name


def test_oddness_defect_detects_g12_at_zero():
    metric = MetricField(g11=lambda u, v: 3.0, g12=lambda u, v: 0.1 * u * v,
                         g22=lambda u, v: 2.0, domain=WIDE)
    rect = RectSpec(ParamPoint(0.5, 0.7), (0.3, 0.2))
    expect = 8.0 * 0.3 * 0.2 * (0.1 * 0.5 * 0.7)
    assert oddness_defect(metric, rect, 0.0) == pytest.approx(expect, rel=1e-12)


def test_oddness_defect_euclidean_zero_everywhere():
    rect = RectSpec(ParamPoint(1.0, -2.0), (0.7, 0.4))
    for t in (0.0, 0.3, 1.0):
        assert oddness_defect(EUCLID, rect, t) == 0.0


def test_oddness_pointwise_antisymmetry_of_f():
    # f(-t) = -f(t) for Liouville metrics, checked through the defect at many t
    metric = catalog("elliptic_plane").metric
    rect = RectSpec(ParamPoint(1.1, 0.9), (0.3, 0.5))
    for t in np.linspace(0.0, 1.0, 11):
        assert abs(oddness_defect(metric, rect, float(t))) <= 1e-9


def test_oddness_defect_requires_unit_interval():
    with pytest.raises(ValueError):
        oddness_defect(EUCLID, RectSpec(ParamPoint(0.0, 0.0), (0.5, 0.5)), 1.5)


# ---------------------------------------------------------------------------
# converse diagnostics
# ---------------------------------------------------------------------------

def test_converse_diagnostics_vanish_on_liouville_metrics():
    cases = {
        "parabolic": (1.0, 1.0),
        "elliptic_plane": (1.0, 1.0),
        "sphere_mercator": (0.2, 3.0),
        "plane_u2_v5": (1.0, 1.0),
    }
    for name, center in cases.items():
        metric = catalog(name).metric
        diag = converse_diagnostics(metric, center, alpha=0.3, eps=0.5)
        assert abs(diag.g12_estimate) <= 1e-5, name
        assert abs(diag.mixed_sum) <= 1e-5, name
        assert abs(diag.mixed_g11) <= 1e-5, name


def test_converse_diagnostics_recover_injected_g12():
    metric = MetricField(g11=lambda u, v: 3.0, g12=lambda u, v: u * v,
                         g22=lambda u, v: 2.0, domain=WIDE)
    diag = converse_diagnostics(metric, (0.5, 0.7), alpha=0.2, eps=0.5)
    assert diag.g12_estimate == pytest.approx(0.35, rel=1e-10)


def test_converse_diagnostics_enneper_mixed_partial():
    # d2 g11 / du dv of 9 (1 + u^2 + v^2)^2 is 72 u v, i.e. 72 at (1, 1)
    metric = catalog("enneper_polynomial").metric
    diag = converse_diagnostics(metric, (1.0, 1.0), alpha=0.25, eps=0.05)
    assert diag.mixed_g11 == pytest.approx(72.0, abs=1.0)
    assert diag.mixed_sum == pytest.approx(144.0, abs=1.0)


def test_converse_diagnostics_eps_validated():
    with pytest.raises(ValueError):
        converse_diagnostics(EUCLID, (0.0, 0.0), alpha=0.3, eps=1.2)


# ---------------------------------------------------------------------------
# discrete diagonals and chords
# ---------------------------------------------------------------------------

def test_discrete_gap_parabolic_all_k():
    chart = catalog("parabolic")
    rect = RectSpec(ParamPoint(1.0, 0.9), (0.5, 0.4))
    for k in (1, 2, 3, 5, 8, 16, 32):
        assert abs(discrete_diagonal_gap(chart, rect, k)) <= 1e-12


def test_discrete_gap_plane_u2_v5_k_sweep():
    chart = catalog("plane_u2_v5")
    rect = RectSpec(ParamPoint(1.0, 1.0), (0.5, 0.6))
    for k in range(1, 33):
        assert abs(discrete_diagonal_gap(chart, rect, k)) <= 1e-10


def test_discrete_gap_cartesian_single_chord():
    chart = catalog("cartesian")
    rect = RectSpec(ParamPoint(0.2, -0.3), (0.8, 0.5))
    assert discrete_diagonal_gap(chart, rect, 1) == 0.0


def test_discrete_gap_needs_plane_chart():
    chart = catalog("sphere_mercator")
    rect = RectSpec(ParamPoint(0.0, 3.0), (0.3, 0.4))
    with pytest.raises(UnsupportedChartError):
        discrete_diagonal_gap(chart, rect, 4)


def test_discrete_energies_converge_while_gap_stays_flat():
    chart = catalog("polar_log")
    rect = RectSpec(ParamPoint(0.1, 3.0), (0.4, 0.8))
    pair = diagonals(rect)
    energy = curve_energy(chart.metric, pair.d1)
    for j in range(6):
        k = 2 ** j
        assert abs(discrete_diagonal_gap(chart, rect, k)) <= 1e-10
    ts = np.linspace(-1.0, 1.0, 65)
    pts = [chart.embed(*pair.d1.point(t)) for t in ts]
    assert discrete_energy(pts, -1.0, 1.0) == pytest.approx(energy, rel=1e-3)


def test_ivory_chords_parabolic_documented_rectangle():
    # corners A=(1,0) and C=(2,1); image chords both sqrt(20)
    chart = catalog("parabolic")
    rect = RectSpec(ParamPoint(1.5, 0.5), (-0.5, -0.5))
    assert rect.corners[0] == ParamPoint(1.0, 0.0)
    first, second = ivory_chords(chart, rect)
    assert first == pytest.approx(math.sqrt(20.0), abs=1e-12)
    assert second == pytest.approx(math.sqrt(20.0), abs=1e-12)


def test_ivory_chords_cartesian():
    chart = catalog("cartesian")
    rect = RectSpec(ParamPoint(0.0, 0.0), (0.6, 0.8))
    first, second = ivory_chords(chart, rect)
    assert first == pytest.approx(2.0)
    assert second == pytest.approx(2.0)


def test_ivory_chords_plane_u2_v5_random():
    chart = catalog("plane_u2_v5")
    rng = np.random.default_rng(31)
    for rect in random_rectangles(chart.domain, 25, rng):
        first, second = ivory_chords(chart, rect)
        assert abs(first - second) <= 1e-10 * max(first, 1.0)


def test_ivory_chords_need_plane_chart():
    chart = catalog("sphere_rotation")
    with pytest.raises(UnsupportedChartError):
        ivory_chords(chart, RectSpec(ParamPoint(0.0, 3.0), (0.3, 0.4)))


def test_random_rectangles_stay_inside_domain():
    for seed in (0, 1, 2, 99):
        rng = np.random.default_rng(seed)
        for name in ("parabolic", "sphere_mercator", "plane_u2_v5"):
            domain = catalog(name).domain
            for rect in random_rectangles(domain, 50, rng):
                rect.require_inside(domain)
                rect.require_nondegenerate()
