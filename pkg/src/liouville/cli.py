"""Command-line front end: verification sweeps, nets, and numeric tables.

Exit status contract: 0 success, 1 verification failure, 2 usage error,
3 I/O failure.  All randomness is seeded; a fixed seed gives byte-identical
CSV output, and SVG output differs only in a timestamp comment that
``--no-timestamp`` suppresses.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import math
import sys

import numpy as np

from .catalog import SurfaceChart, catalog, chart_names
from .diagonals import (RectSpec, diagonals, ivory_chords, oddness_defect,
                        random_rectangles)
from .elliptic import ellint_pi_jacobi, gen_sn
from .ellipsoid import EllipsoidAxes, forward_maps, liouville_chart
from .errors import LiouvilleError, UnknownChartError
from .geodesics import (LiouvilleSplit, integrate_liouville_geodesic,
                        unit_speed_defect)
from .geometry import (LIOUVILLE_CLASSES, ParamPoint, classify_line_element,
                       curve_energy, curve_length, discrete_energy)
from .ndimensional import NdMetric, NdRect, nd_diagonal_energies
from .quadrature import QuadratureSpec
from .svg import SvgCanvas

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

# Conformal factors U(u) + V(v) of the isothermal catalog charts, for the
# geodesic command.
ISOTHERMAL_SPLITS = {
    "cartesian": (lambda u: 1.0, lambda v: 0.0),
    "polar_log": (lambda u: math.exp(2.0 * u), lambda v: 0.0),
    "parabolic": (lambda u: 4.0 * u * u, lambda v: 4.0 * v * v),
    "elliptic_plane": (lambda u: -0.5 * math.cos(2.0 * u),
                       lambda v: 0.5 * math.cosh(2.0 * v)),
    "sphere_mercator": (lambda u: 1.0 / math.cosh(u) ** 2, lambda v: 0.0),
    "pseudosphere_isothermal": (lambda u: 1.0 / (u * u), lambda v: 0.0),
    "enneper_polynomial": None,  # not a Liouville line element
    "helicoid_catenoid": (lambda u: math.exp(-2.0 * u) + 16.0 * math.exp(2.0 * u) + 8.0,
                          lambda v: 0.0),
}


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _write_rows(path, header, rows) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    text = buffer.getvalue()
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _parse_axes(text: str) -> EllipsoidAxes:
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 3:
        raise ValueError("axes must be three comma-separated numbers a,b,c")
    return EllipsoidAxes(*parts)


def _parse_rect(text: str) -> RectSpec:
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ValueError("rect must be four comma-separated numbers cu,cv,du,dv")
    return RectSpec(ParamPoint(parts[0], parts[1]), (parts[2], parts[3]))


def _load_chart(args) -> SurfaceChart:
    name = args.chart
    if name == "ellipsoid":
        axes = _parse_axes(args.axes) if args.axes else EllipsoidAxes(3.0, 2.0, 1.0)
        return liouville_chart(axes, forward_maps(axes))
    params = {}
    if name == "ellipsoid_curvature_lines" and args.axes:
        params["axes"] = tuple(float(x) for x in args.axes.split(","))
    if name == "helicoid_catenoid" and getattr(args, "family_t", None) is not None:
        params["t"] = args.family_t
    return catalog(name, **params)


def _project(point, axis: str):
    if len(point) == 2:
        return point[0], point[1]
    drop = {"x": 0, "y": 1, "z": 2}[axis]
    kept = [point[i] for i in range(3) if i != drop]
    return kept[0], kept[1]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        chart = _load_chart(args)
    except UnknownChartError:
        print(f"unknown chart {args.chart!r}; known: {', '.join(chart_names())} "
              f"or 'ellipsoid'", file=sys.stderr)
        return EXIT_USAGE
    metric = chart.metric
    quad = QuadratureSpec(order=args.quad_order)
    expected_liouville = chart.expected_class in LIOUVILLE_CLASSES

    rows = []
    all_ok = True

    found = classify_line_element(metric)
    class_ok = found == chart.expected_class
    all_ok &= class_ok
    rows.append((chart.name, "classification", found.value,
                 0.0, 0.0, "pass" if class_ok else "FAIL"))

    rng = np.random.default_rng(args.seed)
    rects = random_rectangles(metric.domain, args.rects, rng)
    if args.rect:
        try:
            explicit = _parse_rect(args.rect)
            explicit.require_inside(metric.domain)
        except ValueError as exc:
            print(f"bad rectangle: {exc}", file=sys.stderr)
            return EXIT_USAGE
        rects.insert(0, explicit)
    if chart.name == "enneper_polynomial":
        # documented counterexample rectangle; its gap is the witness value 12
        rects.insert(0, RectSpec(ParamPoint(1.0, 1.0), (0.5, 0.5)))

    witness = 0.0
    for rect in rects:
        pair = diagonals(rect, metric.domain)
        e1 = curve_energy(metric, pair.d1, quad)
        e2 = curve_energy(metric, pair.d2, quad)
        gap = e1 - e2
        tol = args.tol * max(e1, 1.0)
        # a gap three orders above the pass tolerance counts as a witness
        # that the line element is not of Liouville form
        witness_tol = 1e3 * tol
        detail = (f"M=({rect.center.u:.6g},{rect.center.v:.6g}) "
                  f"d=({rect.half_diagonal[0]:.6g},{rect.half_diagonal[1]:.6g})")
        if expected_liouville:
            ok = abs(gap) <= tol
            all_ok &= ok
            verdict = "pass" if ok else "FAIL"
        else:
            witness = max(witness, abs(gap) / witness_tol)
            verdict = "witness" if abs(gap) > witness_tol else "small"
        rows.append((chart.name, "diagonal_gap", detail, gap, tol, verdict))

    if not expected_liouville:
        ok = witness > 1.0
        all_ok &= ok
        rows.append((chart.name, "non_liouville_witness",
                     "max |gap| over witness tolerance", witness, 1.0,
                     "pass" if ok else "FAIL"))

    if expected_liouville:
        worst = 0.0
        for rect in rects[: min(len(rects), 10)]:
            for t in (0.0, 0.25, 0.5, 0.75, 1.0):
                worst = max(worst, abs(oddness_defect(metric, rect, t)))
        ok = worst <= 1e-9
        all_ok &= ok
        rows.append((chart.name, "oddness_defect", "max over rects and t",
                     worst, 1e-9, "pass" if ok else "FAIL"))

    if chart.ambient_dim == 2:
        worst = 0.0
        for rect in rects:
            first, second = ivory_chords(chart, rect)
            worst = max(worst, abs(first - second) / max(first, 1.0))
        ok = worst <= 1e-10
        all_ok &= ok
        rows.append((chart.name, "ivory_chords", "max relative mismatch",
                     worst, 1e-10, "pass" if ok else "FAIL"))

    try:
        _write_rows(args.out, ("chart", "check", "detail", "value", "tolerance", "verdict"), rows)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if all_ok else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# net
# ---------------------------------------------------------------------------

def cmd_net(args) -> int:
    try:
        chart = _load_chart(args)
    except UnknownChartError:
        print(f"unknown chart {args.chart!r}", file=sys.stderr)
        return EXIT_USAGE
    if chart.embed is None:
        print(f"chart {args.chart!r} has no embedding to draw", file=sys.stderr)
        return EXIT_USAGE
    dom = chart.domain
    canvas = SvgCanvas()
    # keep samples strictly inside the open domain; relative so that charts
    # built from inverse tables stay clear of their boundary seams
    shrink_u = 1e-6 * dom.extent_u
    shrink_v = 1e-6 * dom.extent_v
    us = np.linspace(dom.u_min + shrink_u, dom.u_max - shrink_u, args.nu)
    vs = np.linspace(dom.v_min + shrink_v, dom.v_max - shrink_v, args.nv)
    dense_u = np.linspace(dom.u_min + shrink_u, dom.u_max - shrink_u, args.samples)
    dense_v = np.linspace(dom.v_min + shrink_v, dom.v_max - shrink_v, args.samples)
    for u in us:
        canvas.polyline([_project(chart.embed(u, v), args.project) for v in dense_v])
    for v in vs:
        canvas.polyline([_project(chart.embed(u, v), args.project) for u in dense_u])

    if args.rect:
        try:
            rect = _parse_rect(args.rect)
            rect.require_inside(dom)
        except ValueError as exc:
            print(f"bad rectangle: {exc}", file=sys.stderr)
            return EXIT_USAGE
        a, b, c, d = rect.corners
        for p, q in ((a, b), (b, c), (c, d), (d, a)):
            seg = [(p.u + s * (q.u - p.u), p.v + s * (q.v - p.v))
                   for s in np.linspace(0.0, 1.0, args.samples)]
            canvas.polyline([_project(chart.embed(u, v), args.project) for u, v in seg],
                            stroke="#202020", stroke_width=2.0)
        pair = diagonals(rect)
        if args.k:
            ts = np.linspace(-1.0, 1.0, args.k + 1)
            poly1 = [chart.embed(*pair.d1.point(t)) for t in ts]
            poly2 = [chart.embed(*pair.d2.point(t)) for t in ts]
            e1 = discrete_energy(poly1, -1.0, 1.0)
            e2 = discrete_energy(poly2, -1.0, 1.0)
            canvas.polyline([_project(p, args.project) for p in poly1],
                            stroke="#c02020", stroke_width=2.0)
            canvas.polyline([_project(p, args.project) for p in poly2],
                            stroke="#2020c0", stroke_width=2.0)
            canvas.caption(f"discrete energies (k={args.k}): "
                           f"E1={e1:.12g}  E2={e2:.12g}  gap={e1 - e2:.3e}")
        else:
            ts = np.linspace(-1.0, 1.0, args.samples)
            quad = QuadratureSpec(order=args.quad_order)
            e1 = curve_energy(chart.metric, pair.d1, quad)
            e2 = curve_energy(chart.metric, pair.d2, quad)
            canvas.polyline([_project(chart.embed(*pair.d1.point(t)), args.project) for t in ts],
                            stroke="#c02020", stroke_width=2.0)
            canvas.polyline([_project(chart.embed(*pair.d2.point(t)), args.project) for t in ts],
                            stroke="#2020c0", stroke_width=2.0)
            canvas.caption(f"diagonal energies: E1={e1:.12g}  E2={e2:.12g}  gap={e1 - e2:.3e}")

    try:
        with open(args.svg, "w") as handle:
            handle.write(canvas.render(timestamp=not args.no_timestamp))
    except OSError as exc:
        print(f"cannot write {args.svg}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args) -> int:
    try:
        chart = _load_chart(args)
    except UnknownChartError:
        print(f"unknown chart {args.chart!r}", file=sys.stderr)
        return EXIT_USAGE
    if chart.ambient_dim != 2:
        print("table sweeps need a plane chart", file=sys.stderr)
        return EXIT_USAGE
    try:
        rect = _parse_rect(args.rect) if args.rect else None
        if rect is None:
            rng = np.random.default_rng(args.seed)
            rect = random_rectangles(chart.domain, 1, rng)[0]
        rect.require_inside(chart.domain)
    except ValueError as exc:
        print(f"bad rectangle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    quad = QuadratureSpec(order=args.quad_order)
    pair = diagonals(rect)
    e_cont = curve_energy(chart.metric, pair.d1, quad)
    l_cont = curve_length(chart.metric, pair.d1, quad)
    schwarz = l_cont * l_cont / (2.0 * e_cont)  # parameter interval length 2

    rows = []
    for k in range(1, args.k + 1):
        ts = np.linspace(-1.0, 1.0, k + 1)
        poly1 = [chart.embed(*pair.d1.point(t)) for t in ts]
        poly2 = [chart.embed(*pair.d2.point(t)) for t in ts]
        e1 = discrete_energy(poly1, -1.0, 1.0)
        e2 = discrete_energy(poly2, -1.0, 1.0)
        rows.append((k, e1, e2, e1 - e2, e_cont, schwarz))
    try:
        _write_rows(args.out, ("k", "discrete_energy_d1", "discrete_energy_d2",
                               "gap", "continuous_energy_d1", "schwarz_ratio"), rows)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# nd-verify
# ---------------------------------------------------------------------------

def _random_nd_metric(dim: int, rng) -> NdMetric:
    def coeff():
        c0, c1, c2 = rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5), rng.uniform(0.0, 0.5)
        return lambda w, a=c0, b=c1, c=c2: a + b * w + c * w * w

    return NdMetric(tuple(tuple(coeff() for _ in range(dim)) for _ in range(dim)))


def cmd_nd_verify(args) -> int:
    if not 2 <= args.dim <= 12:
        print("dimension must lie in 2..12", file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(args.seed)
    rows = []
    all_ok = True
    for trial in range(args.trials):
        metric = _random_nd_metric(args.dim, rng)
        p0 = tuple(rng.uniform(-1.0, 0.0) for _ in range(args.dim))
        p1 = tuple(rng.uniform(0.2, 1.2) for _ in range(args.dim))
        rect = NdRect(p0, p1)
        energies = nd_diagonal_energies(metric, rect)
        gap = max(energies) - min(energies)
        tol = args.tol * max(max(energies), 1.0)
        ok = gap <= tol
        all_ok &= ok
        for j, energy in enumerate(energies):
            rows.append((trial, j, energy, gap, tol, "pass" if ok else "FAIL"))
    try:
        _write_rows(args.out, ("trial", "diagonal", "energy", "gap", "tolerance", "verdict"), rows)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if all_ok else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# ellipsoid-map
# ---------------------------------------------------------------------------

def cmd_ellipsoid_map(args) -> int:
    axes = _parse_axes(args.axes) if args.axes else EllipsoidAxes(3.0, 2.0, 1.0)
    tables = forward_maps(axes, points=args.points)
    xs = np.linspace(0.0, tables.x_max, args.grid + 2)[1:-1]
    ys = np.linspace(0.0, tables.y_max, args.grid + 2)[1:-1]
    rows = []
    for x in xs:
        for y in ys:
            u = tables.u_of_x(float(x))
            v = tables.v_of_y(float(y))
            residual = max(abs(tables.x_of_u(u) - x), abs(tables.y_of_v(v) - y))
            rows.append((float(x), float(y), u, v, residual))
    try:
        _write_rows(args.out, ("x", "y", "U", "V", "residual"), rows)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    if args.svg:
        chart = liouville_chart(axes, tables)
        canvas = SvgCanvas()
        shrink = 1e-6 * tables.x_max
        dense_x = np.linspace(shrink, tables.x_max - shrink, args.samples)
        dense_y = np.linspace(1e-6 * tables.y_max, tables.y_max * (1 - 1e-6), args.samples)
        for x in np.linspace(shrink, tables.x_max - shrink, args.grid):
            canvas.polyline([_project(chart.embed(float(x), float(y)), args.project)
                             for y in dense_y])
        for y in np.linspace(1e-6 * tables.y_max, tables.y_max * (1 - 1e-6), args.grid):
            canvas.polyline([_project(chart.embed(float(x), float(y)), args.project)
                             for x in dense_x])
        canvas.caption(f"conformal net, axes=({axes.a:g},{axes.b:g},{axes.c:g}), "
                       f"x_max={tables.x_max:.9g}, y_max={tables.y_max:.9g}")
        try:
            with open(args.svg, "w") as handle:
                handle.write(canvas.render(timestamp=not args.no_timestamp))
        except OSError as exc:
            print(f"cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# sn-table
# ---------------------------------------------------------------------------

def cmd_sn_table(args) -> int:
    rows = []
    us = np.linspace(args.u_max / args.count, args.u_max, args.count)
    for u in us:
        sn = gen_sn(args.char_n, float(u), args.mod_m)
        residual = abs(ellint_pi_jacobi(args.char_n, sn, args.mod_m) - u)
        rows.append((args.char_n, args.mod_m, float(u), sn, residual))
    try:
        _write_rows(args.out, ("n", "m", "u", "gen_sn", "residual"), rows)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# geodesic
# ---------------------------------------------------------------------------

def cmd_geodesic(args) -> int:
    split_funcs = ISOTHERMAL_SPLITS.get(args.chart)
    if split_funcs is None:
        known = ", ".join(k for k, v in ISOTHERMAL_SPLITS.items() if v)
        print(f"geodesic integration needs an isothermal Liouville chart "
              f"with a known split; known: {known}", file=sys.stderr)
        return EXIT_USAGE
    try:
        chart = _load_chart(args)
    except UnknownChartError:
        print(f"unknown chart {args.chart!r}", file=sys.stderr)
        return EXIT_USAGE
    start = tuple(float(x) for x in args.start.split(","))
    split = LiouvilleSplit(U=split_funcs[0], V=split_funcs[1], a_const=args.a_const)
    poly = integrate_liouville_geodesic(split, start, args.T, step=args.step,
                                        domain=chart.domain)
    defect = unit_speed_defect(split, poly)
    rows = [(float(t), float(p[0]), float(p[1]), float(w[0]), float(w[1]), defect, poly.status)
            for t, p, w in zip(poly.t, poly.points, poly.velocities)]
    try:
        _write_rows(args.out, ("t", "u", "v", "du", "dv", "unit_speed_defect", "status"), rows)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    if args.svg:
        if chart.embed is None:
            print("chart has no embedding to draw", file=sys.stderr)
            return EXIT_USAGE
        canvas = SvgCanvas()
        dom = chart.domain
        shrink_u = 1e-6 * dom.extent_u
        shrink_v = 1e-6 * dom.extent_v
        dense_u = np.linspace(dom.u_min + shrink_u, dom.u_max - shrink_u, args.samples)
        dense_v = np.linspace(dom.v_min + shrink_v, dom.v_max - shrink_v, args.samples)
        for u in np.linspace(dom.u_min + shrink_u, dom.u_max - shrink_u, args.nu):
            canvas.polyline([_project(chart.embed(float(u), float(v)), args.project)
                             for v in dense_v])
        for v in np.linspace(dom.v_min + shrink_v, dom.v_max - shrink_v, args.nv):
            canvas.polyline([_project(chart.embed(float(u), float(v)), args.project)
                             for u in dense_u])
        canvas.polyline([_project(chart.embed(float(p[0]), float(p[1])), args.project)
                         for p in poly.points], stroke="#c02020", stroke_width=2.0)
        canvas.caption(f"geodesic on {args.chart}, a={args.a_const:g}, "
                       f"T={args.T:g}, status={poly.status}")
        try:
            with open(args.svg, "w") as handle:
                handle.write(canvas.render(timestamp=not args.no_timestamp))
        except OSError as exc:
            print(f"cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--config", default=None, help="flat key=value config file; flags win")
    sub.add_argument("--out", default="-", help="CSV output path ('-' for stdout)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--tol", type=float, default=1e-8)
    sub.add_argument("--quad-order", type=int, default=64, dest="quad_order")
    sub.add_argument("--no-timestamp", action="store_true", dest="no_timestamp")
    sub.add_argument("--project", choices=("x", "y", "z"), default="z",
                     help="projection axis for 3-D charts")
    sub.add_argument("--samples", type=int, default=128,
                     help="samples per drawn curve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liouville",
        description="verify equal diagonal energies on Liouville line elements, "
                    "draw parameter nets, and tabulate energies")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="classification, diagonal-gap sweep, oddness, chords")
    _add_common(p)
    p.add_argument("--chart", required=True)
    p.add_argument("--axes", default=None, help="ellipsoid semi-axes a,b,c")
    p.add_argument("--t", type=float, default=None, dest="family_t",
                   help="family parameter for helicoid_catenoid")
    p.add_argument("--rects", type=int, default=100)
    p.add_argument("--rect", default=None, help="explicit rectangle cu,cv,du,dv")
    p.set_defaults(handler=cmd_verify)

    p = subs.add_parser("net", help="SVG net with a rectangle and its diagonals")
    _add_common(p)
    p.add_argument("--chart", required=True)
    p.add_argument("--axes", default=None)
    p.add_argument("--t", type=float, default=None, dest="family_t")
    p.add_argument("--rect", default=None)
    p.add_argument("--k", type=int, default=0, help="discrete diagonals with k pieces")
    p.add_argument("--nu", type=int, default=12)
    p.add_argument("--nv", type=int, default=12)
    p.add_argument("--svg", default="net.svg")
    p.set_defaults(handler=cmd_net)

    p = subs.add_parser("table", help="CSV sweep of discrete diagonal energies over k")
    _add_common(p)
    p.add_argument("--chart", required=True)
    p.add_argument("--axes", default=None)
    p.add_argument("--t", type=float, default=None, dest="family_t")
    p.add_argument("--rect", default=None)
    p.add_argument("--k", type=int, default=32, help="largest piece count")
    p.set_defaults(handler=cmd_table)

    p = subs.add_parser("nd-verify", help="diagonal energies of random n-rectangles")
    _add_common(p)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(handler=cmd_nd_verify, tol=1e-9)

    p = subs.add_parser("ellipsoid-map", help="conformal tables and net of the ellipsoid")
    _add_common(p)
    p.add_argument("--axes", default="3,2,1")
    p.add_argument("--points", type=int, default=512)
    p.add_argument("--grid", type=int, default=12)
    p.add_argument("--svg", default=None)
    p.set_defaults(handler=cmd_ellipsoid_map)

    p = subs.add_parser("sn-table", help="generalized sn values and inversion residuals")
    _add_common(p)
    p.add_argument("--n", type=float, default=0.3, dest="char_n")
    p.add_argument("--m", type=float, default=0.5, dest="mod_m")
    p.add_argument("--u-max", type=float, default=1.0, dest="u_max")
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(handler=cmd_sn_table)

    p = subs.add_parser("geodesic", help="integrate a unit-speed Liouville geodesic")
    _add_common(p)
    p.add_argument("--chart", required=True)
    p.add_argument("--t", type=float, default=None, dest="family_t")
    p.add_argument("--axes", default=None)
    p.add_argument("--start", default="1.0,1.0")
    p.add_argument("--a-const", type=float, default=0.5, dest="a_const")
    p.add_argument("--T", type=float, default=1.0)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--nu", type=int, default=12)
    p.add_argument("--nv", type=int, default=12)
    p.add_argument("--svg", default=None)
    p.set_defaults(handler=cmd_geodesic)

    return parser


def _apply_config(parser, argv):
    # first pass finds --config; its keys become subcommand defaults, flags win
    if "--config" not in argv:
        return
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        return
    path = argv[idx + 1]
    reader = configparser.ConfigParser()
    with open(path) as handle:
        reader.read_string("[config]\n" + handle.read())
    values = dict(reader["config"])
    for action in parser._subparsers._group_actions:
        for sub in action.choices.values():
            defaults = {}
            for sub_action in sub._actions:
                key = sub_action.dest.replace("_", "-")
                if key in values or sub_action.dest in values:
                    raw = values.get(key, values.get(sub_action.dest))
                    if sub_action.type is not None:
                        defaults[sub_action.dest] = sub_action.type(raw)
                    elif isinstance(sub_action.const, bool) or isinstance(sub_action.default, bool):
                        defaults[sub_action.dest] = raw.lower() in ("1", "true", "yes")
                    else:
                        defaults[sub_action.dest] = raw
            sub.set_defaults(**defaults)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except LiouvilleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
