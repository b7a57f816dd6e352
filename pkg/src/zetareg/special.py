"""Scalar special functions, Bernoulli numbers and adaptive quadrature.

Everything here works in binary64 with compensated summation.  The gamma
family uses upward recurrence to x >= 10 followed by the Stirling/Bernoulli
asymptotic series, so the error model is the first omitted term plus a
rounding allowance.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .context import ConvergenceError, DomainError, RealValue, resolve

EULER_GAMMA = 0.57721566490153286060651209008240243
LOG_2PI = 1.8378770664093454835606594728112353
EPS = 2.0**-52

_SHIFT_TARGET = 10.0


@lru_cache(maxsize=None)
def _bernoulli_table(n):
    # B_0..B_n from sum_{k<=m} C(m+1, k) B_k = 0
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * table[k]
            binom = binom * (m + 1 - k) // (k + 1)
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli_number(n):
    """Exact Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if n >= 3 and n % 2:
        return Fraction(0)
    return _bernoulli_table(n)[n]


def bernoulli_poly(n, t):
    """B_n(t).  Exact for int/Fraction t, float otherwise."""
    if n < 0:
        raise DomainError("n must be non-negative")
    table = _bernoulli_table(n)
    coeffs = [math.comb(n, k) * table[k] for k in range(n + 1)]
    if isinstance(t, (int, Fraction)):
        t = Fraction(t)
        return sum((c * t ** (n - k) for k, c in enumerate(coeffs)), Fraction(0))
    t = float(t)
    return math.fsum(float(c) * t ** (n - k) for k, c in enumerate(coeffs))


@lru_cache(maxsize=None)
def _even_bernoulli_floats(m):
    return tuple(float(bernoulli_number(2 * k)) for k in range(m + 1))


def harmonic(n):
    """Exact harmonic number H_n."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def _check_positive(x):
    x = float(x)
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"argument must be positive and finite, got {x!r}")
    return x


def _shift(x):
    m = 0
    while x + m < _SHIFT_TARGET:
        m += 1
    return m


def log_gamma(x, ctx=None):
    """log Gamma(x) for x > 0."""
    ctx = resolve(ctx)
    x = _check_positive(x)
    m = _shift(x)
    z = x + m
    terms = [(z - 0.5) * math.log(z), -z, 0.5 * LOG_2PI]
    b = _even_bernoulli_floats(ctx.em_order + 1)
    zinv2 = 1.0 / (z * z)
    p = 1.0 / z
    for k in range(1, ctx.em_order + 1):
        terms.append(b[k] / (2 * k * (2 * k - 1)) * p)
        p *= zinv2
    trunc = abs(b[ctx.em_order + 1] / ((2 * ctx.em_order + 2) * (2 * ctx.em_order + 1)) * p)
    terms.extend(-math.log(x + i) for i in range(m))
    val = math.fsum(terms)
    return RealValue(val, trunc + 4 * EPS * math.fsum(abs(t) for t in terms))


def digamma(x, ctx=None):
    """psi(x) = d/dx log Gamma(x) for x > 0."""
    ctx = resolve(ctx)
    x = _check_positive(x)
    m = _shift(x)
    z = x + m
    terms = [math.log(z), -0.5 / z]
    b = _even_bernoulli_floats(ctx.em_order + 1)
    zinv2 = 1.0 / (z * z)
    p = zinv2
    for k in range(1, ctx.em_order + 1):
        terms.append(-b[k] / (2 * k) * p)
        p *= zinv2
    trunc = abs(b[ctx.em_order + 1] / (2 * ctx.em_order + 2) * p)
    terms.extend(-1.0 / (x + i) for i in range(m))
    val = math.fsum(terms)
    return RealValue(val, trunc + 4 * EPS * math.fsum(abs(t) for t in terms))


def trigamma(x, ctx=None):
    """psi'(x) for x > 0."""
    ctx = resolve(ctx)
    x = _check_positive(x)
    m = _shift(x)
    z = x + m
    terms = [1.0 / z, 0.5 / (z * z)]
    b = _even_bernoulli_floats(ctx.em_order + 1)
    zinv2 = 1.0 / (z * z)
    p = zinv2 / z
    for k in range(1, ctx.em_order + 1):
        terms.append(b[k] * p)
        p *= zinv2
    trunc = abs(b[ctx.em_order + 1] * p)
    terms.extend(1.0 / (x + i) ** 2 for i in range(m))
    val = math.fsum(terms)
    return RealValue(val, trunc + 4 * EPS * math.fsum(abs(t) for t in terms))


@lru_cache(maxsize=None)
def _clausen_coeffs():
    # |B_2k| / (2k (2k+1)!) until the coefficient times pi^(2k+1) is negligible
    out = []
    k = 1
    while True:
        c = abs(bernoulli_number(2 * k)) / (2 * k * math.factorial(2 * k + 1))
        out.append(float(c))
        if float(c) * math.pi ** (2 * k + 1) < 1e-19:
            return tuple(out)
        k += 1


def clausen_cl2(theta, ctx=None):
    """Clausen function Cl2(theta) = sum sin(n theta)/n^2.

    Uses the expansion theta - theta log|theta| + sum |B_2k| theta^(2k+1) /
    (2k (2k+1)!) after reducing theta to [-pi, pi].
    """
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")
    t = math.remainder(theta, 2 * math.pi)
    if t == 0.0 or abs(t) == math.pi:
        return RealValue(0.0, 0.0)
    terms = [t, -t * math.log(abs(t))]
    t2 = t * t
    p = t * t2
    for c in _clausen_coeffs():
        terms.append(c * p)
        p *= t2
    val = math.fsum(terms)
    # reduction of theta modulo 2pi costs about one ulp of theta
    red = EPS * abs(theta) * (abs(math.log(abs(t))) + 1.0)
    return RealValue(val, red + 4 * EPS * math.fsum(abs(x) for x in terms))


# Gauss-Kronrod 7/15 nodes and weights on [-1, 1]
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def gk15(f, a, b):
    """One Gauss-Kronrod panel.  Returns (kronrod, |kronrod - gauss|, sum|f| w)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kr = [_WGK[7] * fc]
    ga = [_WG[3] * fc]
    absum = _WGK[7] * abs(fc)
    for i in range(7):
        dx = h * _XGK[i]
        f1 = f(c - dx)
        f2 = f(c + dx)
        kr.append(_WGK[i] * (f1 + f2))
        absum += _WGK[i] * (abs(f1) + abs(f2))
        if i % 2 == 1:
            ga.append(_WG[i // 2] * (f1 + f2))
    k = math.fsum(kr) * h
    g = math.fsum(ga) * h
    return k, abs(k - g), absum * abs(h)


def integrate_adaptive(f, a, b, tol=None, ctx=None, max_panels=4000):
    """Globally adaptive Gauss-Kronrod quadrature of f over [a, b].

    The panel with the largest |K15 - G7| is bisected until the summed
    estimate falls below tol.  Endpoints are never sampled.
    """
    ctx = resolve(ctx)
    tol = ctx.quad_tol if tol is None else float(tol)
    a = float(a)
    b = float(b)
    if a == b:
        return RealValue(0.0, 0.0)
    k, e, ab = gk15(f, a, b)
    heap = [(-e, a, b, k, ab)]
    total_err = e
    panels = 1
    while True:
        rounding = 50 * EPS * math.fsum(item[4] for item in heap)
        if total_err <= tol or total_err <= rounding:
            break
        if panels >= max_panels:
            raise ConvergenceError(
                f"quadrature budget exhausted, error estimate {total_err:.3g}")
        neg_e, lo, hi, _, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ConvergenceError("quadrature interval can no longer be split")
        k1, e1, ab1 = gk15(f, lo, mid)
        k2, e2, ab2 = gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, k1, ab1))
        heapq.heappush(heap, (-e2, mid, hi, k2, ab2))
        total_err = math.fsum(-item[0] for item in heap)
        panels += 1
    heap.sort(key=lambda item: item[1])
    val = math.fsum(item[3] for item in heap)
    return RealValue(val, total_err + 50 * EPS * math.fsum(item[4] for item in heap))


def csum(values):
    """Cascaded pairwise summation with TwoSum error recovery.

    Vectorized alternative to math.fsum for long numpy arrays: each tree
    level adds neighbours and keeps the exact rounding errors, which are
    summed separately.  Deterministic for a given input order.
    """
    a = np.asarray(values, dtype=np.float64)
    if a.size == 0:
        return 0.0
    errs = []
    while a.size > 1:
        if a.size % 2:
            a = np.append(a, 0.0)
        x = a[0::2]
        y = a[1::2]
        s = x + y
        z = s - x
        errs.append(float(np.sum((x - (s - z)) + (y - z))))
        a = s
    return math.fsum([float(a[0])] + errs)
