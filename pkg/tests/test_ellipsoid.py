import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liouville import (DomainError, EllipsoidAxes, LineElementClass,
                       forward_maps,
                       SingularityError, classify_line_element,
                       curvature_line_embed, diagonal_energy_gap,
                       gen_sn_cross_check, induced_metric,
                       is_staeckel_decomposition, liouville_chart,
                       random_rectangles, weight_f)


def test_axes_ordering_enforced():
    with pytest.raises(ValueError):
        EllipsoidAxes(1.0, 2.0, 3.0)
    with pytest.raises(ValueError):
        EllipsoidAxes(3.0, 3.0, 1.0)


def test_weight_documented_value(axes321):
    assert weight_f(axes321, 5.0) == pytest.approx(5.0 / 64.0, abs=1e-15)


def test_weight_sign_pattern(axes321):
    assert weight_f(axes321, 2.5) < 0.0   # between c^2 and b^2
    assert weight_f(axes321, 5.0) > 0.0   # between b^2 and a^2


def test_weight_simple_pole_residue(axes321):
    # f ~ residue / (a^2 - t) near a^2; residue = a^2 / (4 (a^2-b^2)(a^2-c^2))
    residue = 9.0 / (4.0 * 5.0 * 8.0)
    for eps in (1e-5, 1e-6, 1e-7):
        assert weight_f(axes321, 9.0 - eps) * eps == pytest.approx(residue, rel=1e-4)


def test_weight_pole_raises(axes321):
    with pytest.raises(SingularityError):
        weight_f(axes321, 9.0)


def test_embedding_stays_on_ellipsoid(axes321):
    rng = np.random.default_rng(5)
    for _ in range(25):
        u = rng.uniform(4.01, 8.99)
        v = rng.uniform(1.01, 3.99)
        x = curvature_line_embed(axes321, u, v)
        value = (x[0] / 3.0) ** 2 + (x[1] / 2.0) ** 2 + x[2] ** 2
        assert abs(value - 1.0) <= 1e-10


def test_embedding_ordering_enforced(axes321):
    with pytest.raises(DomainError):
        curvature_line_embed(axes321, 2.0, 5.0)


def test_curvature_line_chart_is_staeckel(axes321):
    from liouville import catalog
    chart = catalog("ellipsoid_curvature_lines", axes=(3.0, 2.0, 1.0))
    ok = is_staeckel_decomposition(
        U=lambda u: u * weight_f(axes321, u),
        U1=lambda u: weight_f(axes321, u),
        V=lambda v: v * weight_f(axes321, v),
        V1=lambda v: weight_f(axes321, v),
        metric=chart.metric)
    assert ok


# ---------------------------------------------------------------------------
# forward and inverse maps
# ---------------------------------------------------------------------------

def test_forward_maps_base_points(tables321):
    assert tables321.x_of_u(4.0) == 0.0
    assert tables321.y_of_v(1.0) == 0.0


def test_forward_maps_monotone(tables321):
    us = np.linspace(4.0, 9.0, 40)
    xs = [tables321.x_of_u(float(u)) for u in us]
    assert all(b > a for a, b in zip(xs, xs[1:]))
    assert math.isfinite(tables321.x_max) and math.isfinite(tables321.y_max)
    assert tables321.x_max > 0.0 and tables321.y_max > 0.0


def test_inverse_endpoints_exact(tables321):
    assert tables321.u_of_x(0.0) == 4.0
    assert tables321.v_of_y(0.0) == 1.0
    assert tables321.u_of_x(tables321.x_max) == 9.0
    assert tables321.v_of_y(tables321.y_max) == 4.0


def test_inverse_round_trip(tables321):
    for x in np.linspace(0.0, tables321.x_max, 22)[1:-1]:
        assert abs(tables321.x_of_u(tables321.u_of_x(float(x))) - x) <= 1e-10
    for y in np.linspace(0.0, tables321.y_max, 22)[1:-1]:
        assert abs(tables321.y_of_v(tables321.v_of_y(float(y))) - y) <= 1e-10


def test_inverse_out_of_range(tables321):
    with pytest.raises(ValueError):
        tables321.u_of_x(-0.5)
    with pytest.raises(ValueError):
        tables321.u_of_x(tables321.x_max * 1.1)


def test_inverse_satisfies_defining_odes(axes321, tables321):
    # dU/dx = sqrt(1 / f(U)) and dV/dy = sqrt(-1 / f(V)), by finite differences
    h = 1e-6
    for x in np.linspace(0.1, tables321.x_max - 0.1, 9):
        fd = (tables321.u_of_x(float(x) + h) - tables321.u_of_x(float(x) - h)) / (2 * h)
        expect = math.sqrt(1.0 / weight_f(axes321, tables321.u_of_x(float(x))))
        assert fd == pytest.approx(expect, rel=1e-6)
    for y in np.linspace(0.05, tables321.y_max - 0.05, 9):
        fd = (tables321.v_of_y(float(y) + h) - tables321.v_of_y(float(y) - h)) / (2 * h)
        expect = math.sqrt(-1.0 / weight_f(axes321, tables321.v_of_y(float(y))))
        assert fd == pytest.approx(expect, rel=1e-6)


# ---------------------------------------------------------------------------
# the conformal chart
# ---------------------------------------------------------------------------

def test_conformal_chart_classification(axes321, tables321):
    chart = liouville_chart(axes321, tables321)
    assert chart.expected_class is LineElementClass.ISOTHERMAL_LIOUVILLE
    assert classify_line_element(chart.metric) is LineElementClass.ISOTHERMAL_LIOUVILLE


def test_conformal_factor_positive(axes321, tables321):
    chart = liouville_chart(axes321, tables321)
    for p in chart.domain.grid(9, 9, margin_frac=0.02):
        assert chart.metric.g11(p.u, p.v) > 0.0


def test_pullback_metric_is_conformal(axes321, tables321):
    chart = liouville_chart(axes321, tables321)
    for p in chart.domain.grid(5, 5, margin_frac=0.1):
        g = induced_metric(chart, p, h=1e-5)
        factor = tables321.u_of_x(p.u) - tables321.v_of_y(p.v)
        assert abs(g[0, 1]) <= 1e-6 * factor
        assert g[0, 0] == pytest.approx(factor, abs=1e-6 * max(factor, 1.0))
        assert g[1, 1] == pytest.approx(factor, abs=1e-6 * max(factor, 1.0))


def test_conformal_chart_equal_diagonal_energies(axes321, tables321):
    chart = liouville_chart(axes321, tables321)
    rng = np.random.default_rng(17)
    for rect in random_rectangles(chart.domain, 20, rng):
        gap = diagonal_energy_gap(chart.metric, rect)
        assert abs(gap) <= 1e-7


# ---------------------------------------------------------------------------
# closed-form cross-check through the generalized sn
# ---------------------------------------------------------------------------

def test_gen_sn_cross_check_near_origin(axes321, tables321):
    assert gen_sn_cross_check(axes321, 1e-9 * tables321.y_max, tables321) <= 1e-9
    assert tables321.v_of_y(1e-12) == pytest.approx(1.0, abs=1e-9)


def test_gen_sn_cross_check_midpoint(axes321, tables321):
    assert gen_sn_cross_check(axes321, tables321.y_max / 2.0, tables321) <= 1e-7


def test_gen_sn_cross_check_sweep(axes321, tables321):
    for frac in (0.1, 0.3, 0.7, 0.9):
        assert gen_sn_cross_check(axes321, frac * tables321.y_max, tables321) <= 1e-7


@given(c=st.floats(0.3, 1.5), db=st.floats(0.1, 1.5), da=st.floats(0.1, 1.5))
@settings(max_examples=50, deadline=None)
def test_second_modulus_stays_below_one(c, db, da):
    b = c + db
    a = b + da
    a2, b2, c2 = a * a, b * b, c * c
    m2 = a2 * (b2 - c2) / (b2 * (a2 - c2))
    assert 0.0 < m2 < 1.0


def test_pipeline_works_for_other_axes():
    axes = EllipsoidAxes(2.0, 1.4, 0.9)
    tables = forward_maps(axes, points=192)
    for x in np.linspace(0.0, tables.x_max, 9)[1:-1]:
        assert abs(tables.x_of_u(tables.u_of_x(float(x))) - x) <= 1e-10
    chart = liouville_chart(axes, tables)
    assert classify_line_element(chart.metric) is LineElementClass.ISOTHERMAL_LIOUVILLE
    rng = np.random.default_rng(3)
    for rect in random_rectangles(chart.domain, 10, rng):
        assert abs(diagonal_energy_gap(chart.metric, rect)) <= 1e-7
    assert gen_sn_cross_check(axes, 0.5 * tables.y_max, tables) <= 1e-7
