"""Incomplete elliptic integrals of the third kind, standard Jacobi elliptic
functions, and the generalized amplitude/sn/cn/dn/en for nonzero characteristic.

The generalized functions invert the integral of the third kind.  The primary
evaluation path is a truncated Lie series for the system x' = y,
y' = -f_x/2 on the level set f(x, y) = y^2 - (1 - n x^2)^2 (1 - x^2)(1 - m x^2) = 0,
re-centered step by step for analytic continuation.  An adaptive Runge-Kutta
integration of the same system is kept as an independent in-repo check path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, SingularityError
from .quadrature import adaptive_quad

MAX_SERIES_ORDER = 24

_FACTORIALS = [math.factorial(j) for j in range(MAX_SERIES_ORDER + 3)]


@dataclass(frozen=True)
class LieSeriesSpec:
    """Truncation degree and continuation policy for the series evaluation."""

    order: int = 12
    radius_guard: float = 0.5
    truncation_tol: float = 1e-14

    def __post_init__(self):
        if self.order < 5:
            raise ValueError("series order must be at least 5")
        if self.order > MAX_SERIES_ORDER:
            raise ValueError(f"series order above the configured maximum {MAX_SERIES_ORDER}")
        if self.radius_guard <= 0.0:
            raise ValueError("radius_guard must be positive")


# ---------------------------------------------------------------------------
# elliptic integrals of the third kind
# ---------------------------------------------------------------------------

def ellint_pi_trig(n: float, phi: float, m: float, rel_tol: float = 1e-13) -> float:
    """Incomplete integral of the third kind, trigonometric form.

    Integral over theta in [0, phi] of 1 / ((1 - n sin^2) sqrt(1 - m sin^2)).
    """
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellint_pi_trig(n, -phi, m, rel_tol)
    s2max = 1.0 if phi >= 0.5 * math.pi else math.sin(phi) ** 2
    if n * s2max >= 1.0 - 1e-14:
        raise SingularityError("1 - n sin^2(theta) vanishes on the integration path")
    if m * s2max >= 1.0 - 1e-14:
        raise SingularityError("1 - m sin^2(theta) vanishes on the integration path")

    def integrand(theta):
        s2 = math.sin(theta) ** 2
        return 1.0 / ((1.0 - n * s2) * math.sqrt(1.0 - m * s2))

    return adaptive_quad(integrand, 0.0, phi, rel_tol, order=24)


def ellint_pi_jacobi(n: float, x: float, m: float, rel_tol: float = 1e-13) -> float:
    """Incomplete integral of the third kind, Jacobi (algebraic) form.

    Integral over t in [0, x] of 1 / ((1 - n t^2) sqrt((1 - t^2)(1 - m t^2))).
    Deliberately integrated in t (not reduced to the trigonometric form) so
    the two forms stay independent cross-checks of each other.
    """
    if x == 0.0:
        return 0.0
    if x < 0.0:
        return -ellint_pi_jacobi(n, -x, m, rel_tol)
    if x >= 1.0:
        raise ValueError("Jacobi-form upper limit must satisfy |x| < 1; "
                         "use the trigonometric form at phi = pi/2 for the complete integral")
    x2 = x * x
    if n * x2 >= 1.0 - 1e-14:
        raise SingularityError("1 - n t^2 vanishes on the integration path")
    if m * x2 >= 1.0 - 1e-14:
        raise SingularityError("1 - m t^2 vanishes on the integration path")

    def integrand(t):
        t2 = t * t
        return 1.0 / ((1.0 - n * t2) * math.sqrt((1.0 - t2) * (1.0 - m * t2)))

    return adaptive_quad(integrand, 0.0, x, rel_tol, order=24)


# ---------------------------------------------------------------------------
# polynomial machinery for the Lie-series tables
# ---------------------------------------------------------------------------
# Polynomials in (x, y) are dicts {(i, j): coeff}; coefficients are Fractions
# when the characteristic/modulus are exact, floats otherwise.

def _poly_add(p, q):
    out = dict(p)
    for key, c in q.items():
        acc = out.get(key)
        out[key] = c if acc is None else acc + c
    return {k: c for k, c in out.items() if c != 0}


def _poly_mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            acc = out.get(key)
            term = c1 * c2
            out[key] = term if acc is None else acc + term
    return {k: c for k, c in out.items() if c != 0}


def _poly_dx(p):
    return {(i - 1, j): c * i for (i, j), c in p.items() if i > 0}


def _poly_dy(p):
    return {(i, j - 1): c * j for (i, j), c in p.items() if j > 0}


def _poly_eval(p, x, y):
    if not p:
        return 0 * x
    mi = max(i for i, _ in p)
    mj = max(j for _, j in p)
    xs = [x ** 0]
    for _ in range(mi):
        xs.append(xs[-1] * x)
    ys = [y ** 0]
    for _ in range(mj):
        ys.append(ys[-1] * y)
    acc = 0 * x
    for (i, j), c in p.items():
        acc = acc + c * xs[i] * ys[j]
    return acc


def _is_exact(value) -> bool:
    return isinstance(value, (int, Fraction))


@lru_cache(maxsize=256)
def _lie_tables(n, m, jmax: int, exact: bool):
    """D^j x for j = 0..jmax with D = y d/dx + (g'(x)/2) d/dy.

    g(x) = (1 - n x^2)^2 (1 - x^2)(1 - m x^2) is the square of the level-set
    speed; the operator is the derivation of the flow x' = y, y' = g'(x)/2.
    ``exact`` is part of the cache key: a dyadic Fraction and its float value
    hash alike, but must not share coefficient tables.
    """
    one = Fraction(1) if exact else 1.0
    half = Fraction(1, 2) if exact else 0.5
    nn = Fraction(n) if exact else float(n)
    mm = Fraction(m) if exact else float(m)

    quad_n = {(0, 0): one, (2, 0): -nn}
    g = _poly_mul(_poly_mul(quad_n, quad_n),
                  _poly_mul({(0, 0): one, (2, 0): -one}, {(0, 0): one, (2, 0): -mm}))
    gp_half = {k: c * half for k, c in _poly_dx(g).items()}
    y_poly = {(0, 1): one}

    tables = [{(1, 0): one}]
    for _ in range(jmax):
        prev = tables[-1]
        nxt = _poly_add(_poly_mul(y_poly, _poly_dx(prev)),
                        _poly_mul(gp_half, _poly_dy(prev)))
        tables.append(nxt)
    return tuple(tables)


def lie_sn_series(n, m, order: int = 12):
    """Derivative-basis coefficients c_j of gen-sn about 0: sn = sum c_j u^j / j!.

    c_j is the j-fold application of the flow derivation to x, evaluated at
    the initial state (0, 1).  Exact (Fraction) when n and m are exact.
    """
    if not 1 <= order <= MAX_SERIES_ORDER:
        raise ValueError(f"series order must lie in 1..{MAX_SERIES_ORDER}")
    exact = _is_exact(n) and _is_exact(m)
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    key_n = Fraction(n) if exact else float(n)
    key_m = Fraction(m) if exact else float(m)
    tables = _lie_tables(key_n, key_m, order, exact)
    return [_poly_eval(p, zero, one) for p in tables]


def lie_sn_monomial_coefficients(n, m, order: int = 12):
    """Taylor coefficients of gen-sn about 0 in the plain u^j basis."""
    coeffs = lie_sn_series(n, m, order)
    if _is_exact(n) and _is_exact(m):
        return [c / Fraction(_FACTORIALS[j]) for j, c in enumerate(coeffs)]
    return [c / _FACTORIALS[j] for j, c in enumerate(coeffs)]


@lru_cache(maxsize=256)
def _compiled_tables(n: float, m: float, jmax: int):
    compiled = []
    for poly in _lie_tables(n, m, jmax, False):
        items = tuple(sorted((i, j, float(c)) for (i, j), c in poly.items()))
        mi = max(i for i, _, _ in items)
        mj = max(j for _, j, _ in items)
        compiled.append((items, mi, mj))
    return tuple(compiled)


def _eval_compiled(table, x: float, y: float) -> float:
    items, mi, mj = table
    xs = [1.0] * (mi + 1)
    for i in range(1, mi + 1):
        xs[i] = xs[i - 1] * x
    ys = [1.0] * (mj + 1)
    for j in range(1, mj + 1):
        ys[j] = ys[j - 1] * y
    acc = 0.0
    for i, j, c in items:
        acc += c * xs[i] * ys[j]
    return acc


# ---------------------------------------------------------------------------
# generalized Jacobi functions via re-centered Lie series
# ---------------------------------------------------------------------------

def _advance(n: float, m: float, z: float, spec: LieSeriesSpec):
    """March (x, y) from (0, 1) through parameter z; returns (x, y, quarter_turns)."""
    if z == 0.0:
        return 0.0, 1.0, 0
    tables = _compiled_tables(float(n), float(m), spec.order + 1)
    direction = 1.0 if z > 0.0 else -1.0
    x, y = 0.0, 1.0
    sign_y = 1.0
    turns = 0
    done = 0.0
    while abs(z - done) > 1e-16 * max(1.0, abs(z)):
        h = direction * min(abs(z - done), spec.radius_guard)
        derivs = [_eval_compiled(tb, x, y) for tb in tables]
        while True:
            x1 = 0.0
            y1 = 0.0
            hj = 1.0
            last_x = last_y = 0.0
            for j in range(spec.order + 1):
                w = hj / _FACTORIALS[j]
                last_x = derivs[j] * w
                last_y = derivs[j + 1] * w
                x1 += last_x
                y1 += last_y
                hj *= h
            if max(abs(last_x), abs(last_y)) <= spec.truncation_tol * max(1.0, abs(x1), abs(y1)):
                break
            h *= 0.5
            if abs(h) < 1e-12:
                raise AccuracyError("Lie-series step size underflow before reaching tolerance")
        done += h
        x, y = x1, y1
        if abs(x) > 1.0 + 1e-9:
            raise AccuracyError(f"series state left |x| <= 1 (x = {x})")
        if 1.0 - n * x * x <= 0.0:
            raise SingularityError("trajectory left the region 1 - n x^2 > 0")
        if y * sign_y < 0.0 and abs(y) > 1e-12:
            turns += 1
            sign_y = -sign_y
    return x, y, turns


def gen_sn_state(n: float, z: float, m: float,
                 spec: LieSeriesSpec = LieSeriesSpec()) -> tuple:
    """Generalized sn and its z-derivative as the pair (x, y) of the flow."""
    x, y, _ = _advance(float(n), float(m), float(z), spec)
    return x, y


def gen_sn(n: float, z: float, m: float, spec: LieSeriesSpec = LieSeriesSpec()) -> float:
    """Generalized Jacobi sn with characteristic n (gen_sn(0, z, m) is standard sn)."""
    x, _, _ = _advance(float(n), float(m), float(z), spec)
    return x


def _clipped_sqrt(value: float, what: str) -> float:
    if value < 0.0:
        if value < -1e-12:
            raise SingularityError(f"{what} is negative ({value})")
        value = 0.0
    return math.sqrt(value)


def gen_cn(n: float, z: float, m: float, spec: LieSeriesSpec = LieSeriesSpec()) -> float:
    x = gen_sn(n, z, m, spec)
    return _clipped_sqrt(1.0 - x * x, "1 - sn^2")


def gen_dn(n: float, z: float, m: float, spec: LieSeriesSpec = LieSeriesSpec()) -> float:
    x = gen_sn(n, z, m, spec)
    return _clipped_sqrt(1.0 - m * x * x, "1 - m sn^2")


def gen_en(n: float, z: float, m: float, spec: LieSeriesSpec = LieSeriesSpec()) -> float:
    x = gen_sn(n, z, m, spec)
    value = 1.0 - n * x * x
    if value <= 0.0:
        raise SingularityError("1 - n sn^2 is not positive")
    return math.sqrt(value)


def gen_am(n: float, z: float, m: float, spec: LieSeriesSpec = LieSeriesSpec()) -> float:
    """Generalized amplitude: inverse of the integral of the third kind.

    The branch is tracked through quarter periods so the amplitude is
    continuous and monotone in z.
    """
    x, _, turns = _advance(float(n), float(m), float(z), spec)
    base = math.asin(max(-1.0, min(1.0, x)))
    sign = 1.0 if z >= 0.0 else -1.0
    if turns % 2 == 0:
        return sign * turns * math.pi + base
    return sign * turns * math.pi - base


# ---------------------------------------------------------------------------
# independent check path: adaptive Runge-Kutta on the same first-order system
# ---------------------------------------------------------------------------

def _g_poly_coeffs(n: float, m: float) -> np.ndarray:
    from numpy.polynomial import polynomial as P
    quad_n = np.array([1.0, 0.0, -n])
    g = P.polymul(P.polymul(quad_n, quad_n),
                  P.polymul(np.array([1.0, 0.0, -1.0]), np.array([1.0, 0.0, -m])))
    return g


def gen_sn_ode(n: float, z: float, m: float, rtol: float = 1e-12,
               atol: float = 1e-14) -> float:
    """gen-sn by adaptive Runge-Kutta continuation of x' = y, y' = g'(x)/2.

    Serves as the in-repo oracle for the Lie-series path; the two methods
    share only the defining first-order system.
    """
    if z == 0.0:
        return 0.0
    from numpy.polynomial import polynomial as P
    from scipy.integrate import solve_ivp

    gprime = P.polyder(_g_poly_coeffs(float(n), float(m)))

    def rhs(_, state):
        return (state[1], 0.5 * P.polyval(state[0], gprime))

    sol = solve_ivp(rhs, (0.0, float(z)), (0.0, 1.0), method="DOP853",
                    rtol=rtol, atol=atol, t_eval=[float(z)])
    if not sol.success:
        raise AccuracyError(f"Runge-Kutta continuation failed: {sol.message}")
    return float(sol.y[0, -1])


# ---------------------------------------------------------------------------
# standard Jacobi elliptic functions (descending Landen / AGM)
# ---------------------------------------------------------------------------

def jacobi_standard(z: float, m: float) -> tuple:
    """Standard (sn, cn, dn) at parameter m in [0, 1] via the AGM descent."""
    if not 0.0 <= m <= 1.0:
        raise ValueError("jacobi_standard requires 0 <= m <= 1")
    if m == 0.0:
        return math.sin(z), math.cos(z), 1.0
    if m == 1.0:
        sech = 1.0 / math.cosh(z)
        return math.tanh(z), sech, sech

    a = [1.0]
    b = [math.sqrt(1.0 - m)]
    c = [math.sqrt(m)]
    while abs(c[-1]) > 1e-16 and len(a) < 40:
        a_next = 0.5 * (a[-1] + b[-1])
        b_next = math.sqrt(a[-1] * b[-1])
        c_next = 0.5 * (a[-1] - b[-1])
        a.append(a_next)
        b.append(b_next)
        c.append(c_next)
    last = len(a) - 1
    phi = (2.0 ** last) * a[last] * z
    for i in range(last, 0, -1):
        ratio = max(-1.0, min(1.0, c[i] / a[i] * math.sin(phi)))
        phi = 0.5 * (phi + math.asin(ratio))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - m * sn * sn)
    return sn, cn, dn
