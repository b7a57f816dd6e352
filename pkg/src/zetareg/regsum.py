"""Abel regularization of divergent Dirichlet-type series.

A series sum a_n is given the value lim_{eps->0+} sum a_n exp(-eps n).  The
damped sums are evaluated on the geometric schedule eps_k = eps0 2^-k and
the limit is extrapolated.  For trigonometric weights with x not an
integer, the damped sum is analytic in eps near 0 (the singularities sit at
eps = +-2 pi i dist(x, Z)), so plain polynomial extrapolation converges
geometrically.

Phases 2 pi n x are reduced exactly: x is split so that n * x_hi is exact in
binary64, and the fractional part is taken before multiplying by 2 pi.
Without this the rounding error of n x at n ~ 1e5 is correlated across the
eps levels and leaks into the extrapolated limit at the 1e-9 level.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .context import ConvergenceError, DomainError, RealValue, resolve
from .special import EPS, EULER_GAMMA, bernoulli_number, csum, integrate_adaptive

TWO_PI_HI = 2 * math.pi
TWO_PI_LO = 2.4492935982947064e-16  # 2 pi - TWO_PI_HI
_LD_EPS = float(np.finfo(np.longdouble).eps)
_CUT = 41.5  # exp(-41.5) ~ 1e-18


class TrigKind(enum.Enum):
    COS = "cos"
    SIN = "sin"


class Basis(enum.Enum):
    POLY = "poly"
    POLY_LOG = "poly_log"


class ExtrapolationError(ConvergenceError):
    """Least-squares extrapolation residual larger than the sample spread."""


@dataclass(frozen=True)
class TrigSeriesSpec:
    j: int
    x: float
    y: float = 0.0
    s: float = 0.0
    kind: TrigKind = TrigKind.SIN

    def __post_init__(self):
        if self.j not in (0, 1, 2):
            raise DomainError("j must be 0, 1 or 2")
        if not 0 < self.x < 1:
            raise DomainError("x must lie strictly between 0 and 1")
        if not isinstance(self.kind, TrigKind):
            raise DomainError("kind must be a TrigKind")


@dataclass(frozen=True)
class ExtrapolationResult:
    value: float
    err_estimate: float
    samples: tuple
    converged: bool

    def as_real(self):
        return RealValue(self.value, self.err_estimate)


def eps_schedule(ctx=None):
    ctx = resolve(ctx)
    return tuple(ctx.abel_eps0 * 2.0**-k for k in range(ctx.abel_levels))


def trig_phase(n, x):
    """cos and sin of 2 pi n x for integer-valued float array n, reduced exactly."""
    n = np.asarray(n, dtype=np.float64)
    c = 134217729.0 * x
    xh = c - (c - x)
    xl = x - xh
    p1 = n * xh  # exact: xh has 26 significant bits
    f1 = p1 - np.floor(p1)
    p2 = n * xl
    t = f1 + p2
    r = (f1 - t) + p2
    th = TWO_PI_HI * t
    d = TWO_PI_HI * r + TWO_PI_LO * t
    co = np.cos(th)
    si = np.sin(th)
    return co - d * si, si + d * co


def _neville(eps, vals):
    # returns the full extrapolant and the one that drops the largest eps
    cur = list(vals)
    m = len(eps)
    prev = None
    for k in range(1, m):
        cur = [(eps[i] * cur[i + 1] - eps[i + k] * cur[i]) / (eps[i] - eps[i + k])
               for i in range(m - k)]
        if k == m - 2:
            prev = cur[-1]
    return cur[0], prev


_LOG_BASIS = (
    lambda e: np.ones_like(e),
    lambda e: e,
    lambda e: e * np.log(e),
    lambda e: e * e,
    lambda e: e * e * np.log(e),
)


def _lsq_limit(eps, vals, p):
    e = np.asarray(eps, dtype=np.float64)
    v = np.asarray(vals, dtype=np.float64)
    A = np.column_stack([f(e) for f in _LOG_BASIS[:p]])
    scale = np.max(np.abs(A), axis=0)
    coef, *_ = np.linalg.lstsq(A / scale, v, rcond=None)
    resid = v - (A / scale) @ coef
    return coef[0] / scale[0], float(np.sqrt(np.mean(resid**2)))


def _check_samples(samples):
    if len(samples) < 3:
        raise DomainError("extrapolation needs at least 3 samples")
    eps = [float(e) for e, _ in samples]
    if any(not b < a for a, b in zip(eps, eps[1:])) or eps[-1] <= 0:
        raise DomainError("eps values must be positive and strictly decreasing")
    return eps, [float(v) for _, v in samples]


def extrapolate(samples, basis=Basis.POLY, ctx=None):
    """Limit at eps = 0 of a sequence of (eps, value) samples."""
    eps, vals = _check_samples(samples)
    if basis is Basis.POLY:
        val, prev = _neville(eps, vals)
        if prev is None:
            prev = vals[-1]
        return RealValue(val, 4 * abs(val - prev))
    m = len(eps)
    p = min(5, m - 1)
    val, rms = _lsq_limit(eps, vals, p)
    spread = max(vals) - min(vals)
    if rms > spread and spread > 0:
        raise ExtrapolationError(f"fit residual {rms:.3g} exceeds sample spread {spread:.3g}")
    prev, _ = _lsq_limit(eps[1:], vals[1:], min(p, m - 2))
    return RealValue(float(val), 4 * abs(float(val) - float(prev)))


def _finish(eps, vals, floor, basis, ctx):
    samples = tuple(zip(eps, vals))
    r = extrapolate(samples, basis, ctx)
    err = r.err_estimate + floor
    return ExtrapolationResult(r.value, err, samples, err <= 10 * ctx.abs_tol)


def _cutoff(eps, s, j):
    grow = max(0.0, -s)
    N = _CUT / eps
    for _ in range(4):
        ln = math.log(N)
        N = (_CUT + grow * ln + j * math.log(max(ln, 1.0))) / eps
    return int(math.ceil(N)) + 1


@lru_cache(maxsize=256)
def _trig_tables(x, s, eps):
    """Damped sums of log^j n cos/sin(2 pi n x) / n^s, j = 0..2, at each eps."""
    Nmax = _cutoff(eps[-1], s, 2)
    n = np.arange(1, Nmax + 1, dtype=np.float64)
    co, si = trig_phase(n, x)
    ln = np.log(n)
    base = n ** (-s) if s != 0 else np.ones_like(n)
    sums = {}
    floors = {}
    for j in range(3):
        w = base * ln**j
        for kind, tr in ((TrigKind.COS, co), (TrigKind.SIN, si)):
            wt = w * tr
            out = []
            absmax = 0.0
            for e in eps:
                N = min(_cutoff(e, s, j), Nmax)
                terms = wt[:N] * np.exp(-e * n[:N])
                out.append(csum(terms))
                absmax = max(absmax, float(np.sum(np.abs(terms))))
            sums[(j, kind)] = tuple(out)
            floors[(j, kind)] = 2 * EPS * absmax
    return sums, floors


def trig_samples(spec, ctx=None):
    """Damped sums for spec on the context schedule, and a rounding floor."""
    ctx = resolve(ctx)
    eps = eps_schedule(ctx)
    sums, floors = _trig_tables(float(spec.x), float(spec.s), eps)
    cy = math.cos(spec.y)
    sy = math.sin(spec.y)
    C = sums[(spec.j, TrigKind.COS)]
    S = sums[(spec.j, TrigKind.SIN)]
    fc = floors[(spec.j, TrigKind.COS)]
    fs = floors[(spec.j, TrigKind.SIN)]
    if spec.y == 0.0:
        vals = C if spec.kind is TrigKind.COS else S
        floor = fc if spec.kind is TrigKind.COS else fs
    elif spec.kind is TrigKind.SIN:
        vals = tuple(sv * cy + cv * sy for cv, sv in zip(C, S))
        floor = fs * abs(cy) + fc * abs(sy)
    else:
        vals = tuple(cv * cy - sv * sy for cv, sv in zip(C, S))
        floor = fc * abs(cy) + fs * abs(sy)
    return eps, vals, floor


def abel_trig_limit(spec, ctx=None, basis=Basis.POLY):
    """Abel limit of sum_{n>=1} log^j n trig(2 pi n x + y) / n^s."""
    ctx = resolve(ctx)
    eps, vals, floor = trig_samples(spec, ctx)
    res = _finish(eps, vals, floor, basis, ctx)
    if not res.converged:
        raise ConvergenceError(
            f"Abel limit did not converge: err {res.err_estimate:.3g} for {spec}")
    return res


@lru_cache(maxsize=64)
def _alt_exp_sums(k, eps):
    # sum_{n>=1} (-1)^n n^k log n e^{-n z}, paired as (2m) - (2m-1) in long double
    out = []
    absmax = 0.0
    for z in eps:
        N = _cutoff(z, -k, 1)
        M = N // 2 + 1
        m = np.arange(1, M + 1, dtype=np.longdouble)
        ev = 2 * m
        od = ev - 1
        lev = np.log(ev)
        # ev^k log ev - od^k log od without cancellation
        diff = (ev**k - od**k) * lev + od**k * np.log1p(1 / od)
        zz = np.longdouble(z)
        pairs = np.exp(-od * zz) * (diff + ev**k * lev * np.expm1(-zz))
        hi = pairs.astype(np.float64)
        lo = (pairs - hi.astype(np.longdouble)).astype(np.float64)
        out.append(csum(np.concatenate([hi, lo])))
        absmax = max(absmax, float(np.sum(np.abs(hi))))
    return tuple(out), 4 * _LD_EPS * absmax


def abel_exp_limit(k, ctx=None, basis=Basis.POLY):
    """lim_{z->0+} sum_{n>=1} (-1)^n n^k e^{-n z} log n, k in {0, 1, 2}."""
    ctx = resolve(ctx)
    if k not in (0, 1, 2):
        raise DomainError("k must be 0, 1 or 2")
    eps = eps_schedule(ctx)
    vals, floor = _alt_exp_sums(k, eps)
    res = _finish(eps, vals, floor, basis, ctx)
    if not res.converged:
        raise ConvergenceError(f"alternating Abel limit did not converge: {res.err_estimate:.3g}")
    return res


def exp_log_series(z, ctx=None):
    """sum_{n>=1} e^{-n z} log n for z > 0, summed directly."""
    ctx = resolve(ctx)
    z = float(z)
    if not z > 0:
        raise DomainError("z must be positive")
    N = _cutoff(z, 0.0, 1)
    if N > 50 * ctx.max_terms:
        raise ConvergenceError("z too small for direct summation")
    n = np.arange(1, N + 1, dtype=np.float64)
    terms = np.exp(-z * n) * np.log(n)
    val = csum(terms)
    tail = math.exp(-z * (N + 1)) * math.log(N + 1) / -math.expm1(-z)
    return RealValue(val, tail + 4 * EPS * math.fsum(np.abs(terms)))


def exp_log_series_expansion(z, ctx=None, terms=40):
    """-(gamma + log z)/z + sum_{n<terms} (-1)^(n+1) zeta'(-n) z^n / n!."""
    from .zeta import zeta_prime_at_negative_integer

    ctx = resolve(ctx)
    z = float(z)
    with mpmath.workdps(40):
        zm = mpmath.mpf(z)
        acc = [-(EULER_GAMMA + mpmath.log(zm)) / zm]
        err = mpmath.mpf(0)
        for n in range(terms):
            d, om = zeta_prime_at_negative_integer(n, ctx.em_order, ctx.max_terms)
            f = zm**n / mpmath.factorial(n)
            acc.append((-1) ** (n + 1) * d * f)
            err += om * f
        last = abs(acc[-1])
        val = mpmath.fsum(acc)
    v = float(val)
    return RealValue(v, float(err + last) + EPS * abs(v))


@lru_cache(maxsize=512)
def _tail_diffs(j, s, M, R):
    return _forward_diffs(lambda n: mpmath.log(n) ** j * mpmath.power(n, -mpmath.mpf(s)), M, R)


def _forward_diffs(w_mp, M, R):
    with mpmath.workdps(40):
        cur = [w_mp(mpmath.mpf(n)) for n in range(M, M + R + 1)]
        out = []
        for _ in range(R + 1):
            out.append(cur[0])
            cur = [b - a for a, b in zip(cur, cur[1:])]
        return tuple(out)


def _trig_tail(diffs, x, y, M, kind):
    cM, sM = trig_phase(np.array([float(M)]), x)
    qM = complex(cM[0], sM[0])
    q = complex(*[float(v[0]) for v in trig_phase(np.array([1.0]), x)])
    one_q = 1 - q
    tail = 0j
    last = 0.0
    for r, d in enumerate(diffs):
        t = complex(float(d)) * q**r / one_q ** (r + 1)
        tail += t
        last = abs(t)
    tail *= qM * complex(math.cos(y), math.sin(y))
    return (tail.real if kind is TrigKind.COS else tail.imag), last


def _trig_head(w, x, y, kind, n0, M):
    n = np.arange(n0, M, dtype=np.float64)
    co, si = trig_phase(n, x)
    cy = math.cos(y)
    sy = math.sin(y)
    if kind is TrigKind.COS:
        terms = w * (co * cy - si * sy)
    else:
        terms = w * (si * cy + co * sy)
    return math.fsum(terms), 4 * EPS * math.fsum(np.abs(terms))


def weighted_trig_sum(w_np, w_mp, x, kind=TrigKind.COS, y=0.0, n0=1, M=4096, R=10):
    """sum_{n>=n0} w(n) trig(2 pi n x + y) for a smooth weight decaying to 0.

    w_np maps a float array of n to weights, w_mp maps an mpf n to its weight
    (used for the differences in the tail).  The tail from M on is summed by
    parts R + 1 times, which is accurate when the weight is smooth and
    slowly varying, e.g. log^j n / n^s or rational functions of n.
    """
    if not 0 < x < 1:
        raise DomainError("x must lie strictly between 0 and 1")
    n = np.arange(n0, M, dtype=np.float64)
    head, herr = _trig_head(w_np(n), x, y, kind, n0, M)
    tail, last = _trig_tail(_forward_diffs(w_mp, M, R), x, y, M, kind)
    return RealValue(head + tail, last + herr)


def direct_trig_sum(j, x, s, kind=TrigKind.COS, y=0.0, ctx=None, M=4096, R=10):
    """sum_{n>=1} log^j n trig(2 pi n x + y) / n^s for s > 0 (convergent).

    Partial sum to M - 1, then the tail sum_{n>=M} w_n q^n with q = e^{2 pi i x}
    by repeated summation by parts:  q^M sum_r (Delta^r w)_M q^r / (1-q)^(r+1).
    """
    if not s > 0:
        raise DomainError("direct_trig_sum needs s > 0")
    if not 0 < x < 1:
        raise DomainError("x must lie strictly between 0 and 1")
    n = np.arange(1, M, dtype=np.float64)
    w = np.log(n) ** j * n ** (-float(s))
    head, herr = _trig_head(w, x, y, kind, 1, M)
    tail, last = _trig_tail(_tail_diffs(j, float(s), M, R), x, y, M, kind)
    return RealValue(head + tail, last + herr)


def _fd_derivative(f, t, order):
    h = 1e-2 * t
    if order == 1:
        return (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h)
    # third derivative, second-order central stencil
    return (f(t + 2 * h) - 2 * f(t + h) + 2 * f(t - h) - f(t - 2 * h)) / (2 * h**3)


def ramanujan_sum_convergent(f, ctx=None, f_cont=None, N=1000):
    """Ramanujan constant sum_{n>=1} f(n) - int_1^inf f(t) dt of a convergent series.

    Sums f(1..N-1), subtracts int_1^N f by adaptive quadrature on dyadic
    panels, and replaces the remaining sum-minus-integral by its
    Euler-Maclaurin expansion at N.
    """
    ctx = resolve(ctx)
    g = f if f_cont is None else f_cont
    head = [float(f(float(n))) for n in range(1, N)]
    pieces = []
    a = 1.0
    qerr = 0.0
    while a < N:
        b = min(2 * a, float(N))
        r = integrate_adaptive(g, a, b, ctx.quad_tol / 16, ctx)
        pieces.append(r.value)
        qerr += r.err_estimate
        a = b
    d1 = _fd_derivative(g, float(N), 1)
    d3 = _fd_derivative(g, float(N), 3)
    b2 = float(bernoulli_number(2)) / 2
    b4 = float(bernoulli_number(4)) / 24
    tail = [0.5 * g(float(N)), -b2 * d1, -b4 * d3]
    val = math.fsum(head + [-p for p in pieces] + tail)
    err = qerr + abs(tail[2]) + 1e-6 * abs(tail[1]) + 4 * EPS * (
        math.fsum(abs(h) for h in head) + math.fsum(abs(p) for p in pieces))
    return RealValue(val, err)
