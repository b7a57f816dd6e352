"""Hurwitz zeta and its s-derivatives, Stieltjes constants, beta, log G.

The Hurwitz engine runs Euler-Maclaurin summation in mpmath at a working
precision chosen from the size of the leading terms, so that values at
large negative s (where the direct terms are huge and cancel) still come
out correct to binary64.  Every correction term is differentiated in s
exactly; the error estimate is the first omitted correction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .context import ConvergenceError, DomainError, PoleError, RealValue, resolve
from .special import (
    EPS,
    EULER_GAMMA,
    LOG_2PI,
    bernoulli_number,
    log_gamma,
)

POLE_RADIUS = 1e-3
_REL_TARGET = mpmath.mpf("1e-21")


class StieltjesMethod(enum.Enum):
    DIRECT_SERIES = "direct_series"
    X_DERIVATIVE = "x_derivative"
    REPRESENTATION = "representation"


@dataclass(frozen=True)
class ZetaDerivValue:
    k: int
    s: float
    x: float
    value: float
    err_estimate: float

    def as_real(self):
        return RealValue(self.value, self.err_estimate)


@dataclass(frozen=True)
class StieltjesValue:
    n: int
    x: float
    value: float
    method: StieltjesMethod
    err_estimate: float

    def as_real(self):
        return RealValue(self.value, self.err_estimate)


@lru_cache(maxsize=None)
def _rising_coeffs(m):
    """Integer coefficients of s(s+1)...(s+m-1), ascending powers of s."""
    c = [1]
    for i in range(m):
        nxt = [0] * (len(c) + 1)
        for p, v in enumerate(c):
            nxt[p] += v * i
            nxt[p + 1] += v
        c = nxt
    return tuple(c)


@lru_cache(maxsize=None)
def _em_coeff(j):
    b = bernoulli_number(2 * j)
    return b.numerator, b.denominator * math.factorial(2 * j)


def _poly_derivs(coeffs, s, kmax):
    out = []
    for i in range(kmax + 1):
        acc = mpmath.mpf(0)
        for p in range(len(coeffs) - 1, i - 1, -1):
            acc = acc * s + coeffs[p] * math.perm(p, i)
        out.append(acc)
    return out


def _correction_pairs(s, em_order):
    # for s < 0 the correction terms only decay with N once 2M + 1 > -s
    extra = max(0, math.ceil(-float(s) / 2.0)) if s < 0 else 0
    return em_order // 2 + extra


def _em_once(s, x, N, M, kmax):
    a = N + x
    L = mpmath.log(a)
    vals = []
    # direct part
    direct = [mpmath.mpf(0)] * (kmax + 1)
    for n in range(N):
        t = n + x
        lt = -mpmath.log(t)
        p = mpmath.power(t, -s)
        for k in range(kmax + 1):
            direct[k] += p
            p *= lt
    a_s = mpmath.power(a, -s)
    mL = -L
    mlp = [mL**m for m in range(kmax + 1)]
    inv = 1 / (s - 1)
    pole = [(-1) ** i * math.factorial(i) * inv ** (i + 1) for i in range(kmax + 1)]
    corr_terms = []
    for j in range(1, M + 2):
        num, den = _em_coeff(j)
        pd = _poly_derivs(_rising_coeffs(2 * j - 1), s, kmax)
        g = a_s * mpmath.power(a, -(2 * j - 1)) * num / den
        corr_terms.append([
            g * mpmath.fsum(math.comb(k, i) * pd[i] * mlp[k - i] for i in range(k + 1))
            for k in range(kmax + 1)
        ])
    omitted = corr_terms[-1]
    for k in range(kmax + 1):
        v = direct[k]
        v += a * a_s * mpmath.fsum(math.comb(k, i) * mlp[k - i] * pole[i] for i in range(k + 1))
        v += a_s * mlp[k] / 2
        v += mpmath.fsum(ct[k] for ct in corr_terms[:-1])
        vals.append(v)
    return vals, [abs(o) for o in omitted]


@lru_cache(maxsize=4096)
def _hurwitz_mp(s, x, em_order, max_terms):
    """All derivatives k = 0..3 of zeta(s, x) as mpf, plus omitted-term sizes."""
    kmax = 3
    M = _correction_pairs(s, em_order)
    sf = float(s)
    N = max(10, math.ceil(abs(sf)) + 10)
    if sf < 0:
        # keep a = N + x above the growth rate of the correction terms
        N = max(N, math.ceil((2 * M - sf) / (2 * math.pi)) + 10)
    while True:
        lead = max(0.0, -sf) * math.log10(N + float(x) + 1.0)
        dps = 34 + math.ceil(lead) + 3
        with mpmath.workdps(dps):
            sm = mpmath.mpf(s)
            xm = mpmath.mpf(x)
            vals, om = _em_once(sm, xm, N, M, kmax)
            ok = all(om[k] <= _REL_TARGET * max(1, abs(vals[k])) for k in range(kmax + 1))
            if ok:
                return tuple(+v for v in vals), tuple(+o for o in om), dps
        if 2 * N > max_terms:
            return tuple(vals), tuple(om), dps
        N *= 2


def _check_args(k, s, x, kmax=3):
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= kmax:
        raise DomainError(f"derivative order must be an integer in [0, {kmax}]")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if abs(s - 1) < POLE_RADIUS:
        raise PoleError(f"s = {s!r} is inside the pole exclusion zone around 1")


def zeta_mp(k, s, x, ctx=None):
    """k-th s-derivative of zeta(s, x) as an mpf (engine precision)."""
    ctx = resolve(ctx)
    _check_args(k, float(s), float(x))
    vals, om, _ = _hurwitz_mp(s, x, ctx.em_order, ctx.max_terms)
    return vals[k], om[k]


def _finish(mp_val, omitted):
    v = float(mp_val)
    return v, float(omitted) + EPS * abs(v)


def hurwitz_zeta_deriv(k, s, x, ctx=None):
    """d^k/ds^k zeta(s, x) for k in 0..3, s away from 1, x > 0."""
    ctx = resolve(ctx)
    s = float(s)
    x = float(x)
    _check_args(k, s, x)
    val, om = zeta_mp(k, s, x, ctx)
    v, e = _finish(val, om)
    if e > max(ctx.abs_tol, 1e-12 * abs(v)) and e > 1e-6 * abs(v):
        raise ConvergenceError(f"Euler-Maclaurin tail {e:.3g} too large at s={s}, x={x}")
    return ZetaDerivValue(k, s, x, v, e)


def riemann_zeta_deriv(k, s, ctx=None):
    r = hurwitz_zeta_deriv(k, s, 1.0, ctx)
    return RealValue(r.value, r.err_estimate)


@lru_cache(maxsize=None)
def _zeta_prime_minus1(em_order, max_terms):
    z2 = _hurwitz_mp(2.0, 1.0, em_order, max_terms)
    with mpmath.workdps(40):
        val = ((1 - mpmath.euler - mpmath.log(2 * mpmath.pi)) / 12
               + z2[0][1] / (2 * mpmath.pi**2))
        return val, z2[1][1] / (2 * mpmath.pi**2)


def zeta_prime_minus1(ctx=None):
    """zeta'(-1) from (1 - gamma - log 2pi)/12 + zeta'(2)/(2 pi^2)."""
    ctx = resolve(ctx)
    val, om = _zeta_prime_minus1(ctx.em_order, ctx.max_terms)
    return RealValue(*_finish(val, om))


def alt_zeta_deriv(k, s, ctx=None):
    """k-th derivative of the alternating zeta (1 - 2^(1-s)) zeta(s), k <= 2."""
    ctx = resolve(ctx)
    if k not in (0, 1, 2):
        raise DomainError("alt_zeta_deriv supports k in {0, 1, 2}")
    s = float(s)
    log2 = math.log(2.0)
    if abs(s - 1) < POLE_RADIUS:
        # Laurent product of (1 - 2^-u) and zeta(1+u), u = s - 1
        u = s - 1
        a = [0.0] + [(-1) ** (m + 1) * log2**m / math.factorial(m) for m in range(1, 7)]
        gam = [stieltjes(q, 1.0, ctx) for q in range(4)]
        b = [(-1) ** q * g.value / math.factorial(q) for q, g in enumerate(gam)]
        berr = [g.err_estimate / math.factorial(q) for q, g in enumerate(gam)]

        def bq(q):
            return 1.0 if q == -1 else b[q]

        c = []
        cerr = []
        for p in range(5):
            terms = [a[m] * bq(p - m) for m in range(1, p + 2) if p - m <= 3]
            c.append(math.fsum(terms))
            cerr.append(math.fsum(abs(a[m]) * berr[p - m] for m in range(1, p + 1) if p - m <= 3))
        terms = [c[p] * math.perm(p, k) * u ** (p - k) for p in range(k, 5)]
        err = math.fsum(cerr[p] * math.perm(p, k) * abs(u) ** (p - k) for p in range(k, 5))
        err += abs(u) ** (5 - k) * 1e-2 + 4 * EPS * math.fsum(abs(t) for t in terms)
        return RealValue(math.fsum(terms), err)
    with mpmath.workdps(40):
        sm = mpmath.mpf(s)
        p2 = mpmath.power(2, 1 - sm)
        fac = [1 - p2] + [-p2 * (-mpmath.log(2)) ** i for i in range(1, 3)]
        total = mpmath.mpf(0)
        err = mpmath.mpf(0)
        for i in range(k + 1):
            zv, zo = zeta_mp(k - i, s, 1.0, ctx)
            total += math.comb(k, i) * fac[i] * zv
            err += math.comb(k, i) * abs(fac[i]) * zo
    return RealValue(*_finish(total, err))


def dirichlet_beta_deriv(k, s, ctx=None):
    """beta^(k)(s) = d^k/ds^k 4^-s [zeta(s, 1/4) - zeta(s, 3/4)], k in {0, 1}."""
    ctx = resolve(ctx)
    if k not in (0, 1):
        raise DomainError("dirichlet_beta_deriv supports k in {0, 1}")
    s = float(s)
    with mpmath.workdps(40):
        log4 = mpmath.log(4)
        f4 = mpmath.power(4, -mpmath.mpf(s))
        if abs(s - 1) < POLE_RADIUS:
            u = s - 1
            dg = []
            dge = []
            for m in range(4):
                g1 = stieltjes(m, 0.25, ctx)
                g3 = stieltjes(m, 0.75, ctx)
                dg.append(mpmath.mpf(g1.value) - g3.value)
                dge.append(g1.err_estimate + g3.err_estimate)
            D = mpmath.fsum((-1) ** m * dg[m] * mpmath.mpf(u) ** m / math.factorial(m) for m in range(4))
            Dp = mpmath.fsum((-1) ** m * dg[m] * mpmath.mpf(u) ** (m - 1) / math.factorial(m - 1)
                             for m in range(1, 4))
            err = sum(dge) + abs(u) ** (4 - k)
        else:
            z1 = [zeta_mp(i, s, 0.25, ctx) for i in range(2)]
            z3 = [zeta_mp(i, s, 0.75, ctx) for i in range(2)]
            D = z1[0][0] - z3[0][0]
            Dp = z1[1][0] - z3[1][0]
            err = z1[0][1] + z3[0][1] + z1[1][1] + z3[1][1]
        if k == 0:
            val = f4 * D
        else:
            val = f4 * (Dp - log4 * D)
        err = float(err) * float(f4) * (1 + float(log4))
    v = float(val)
    return RealValue(v, err + EPS * abs(v))


@lru_cache(maxsize=None)
def _g_deriv_coeffs(n, m):
    """c_i with d^m/dt^m [log^n t / t] = t^(-1-m) sum_i c_i log^i t."""
    c = [0] * (n + 1)
    c[n] = 1
    for mm in range(m):
        nxt = [0] * (n + 1)
        for i in range(n + 1):
            nxt[i] += -(1 + mm) * c[i]
            if i >= 1:
                nxt[i - 1] += i * c[i]
        c = nxt
    return tuple(c)


def _stieltjes_tail(n, a, M):
    la = math.log(a)
    terms = [-(la ** (n + 1)) / (n + 1), 0.5 * la**n / a]
    for j in range(1, M + 2):
        num, den = _em_coeff(j)
        c = _g_deriv_coeffs(n, 2 * j - 1)
        g = math.fsum(ci * la**i for i, ci in enumerate(c)) * a ** (-2 * j)
        terms.append(-(num / den) * g)
    return terms[:-1], abs(terms[-1])


@lru_cache(maxsize=4096)
def _stieltjes_direct(n, x, em_order, max_terms, abs_tol):
    M = em_order // 2
    N = 1000
    while True:
        k = np.arange(N, dtype=np.float64) + x
        lk = np.log(k)
        lead = lk**n / k
        tail, omitted = _stieltjes_tail(n, N + x, M)
        if omitted <= 0.01 * abs_tol or 2 * N > max_terms:
            break
        N *= 2
    if omitted > abs_tol:
        raise ConvergenceError(f"Stieltjes tail bound {omitted:.3g} exceeds abs_tol")
    parts = list(lead) + tail
    val = math.fsum(parts)
    err = omitted + 4 * EPS * (math.fsum(np.abs(lead)) + math.fsum(abs(t) for t in tail))
    return val, err


def stieltjes(n, x, ctx=None):
    """Generalized Stieltjes constant gamma_n(x), n in 0..3, x > 0.

    Direct limit sum over k < N of log^n(k+x)/(k+x) minus the log-power
    antiderivative, with the tail replaced by its Euler-Maclaurin expansion.
    """
    ctx = resolve(ctx)
    if n not in (0, 1, 2, 3):
        raise DomainError("stieltjes supports n in 0..3")
    x = float(x)
    if not x > 0:
        raise DomainError("x must be positive")
    val, err = _stieltjes_direct(n, x, ctx.em_order, ctx.max_terms, ctx.abs_tol)
    return StieltjesValue(n, x, val, StieltjesMethod.DIRECT_SERIES, err)


def stieltjes_via_xderiv(n, x, ctx=None):
    """gamma_n(x) = (-1)^(n+1)/(n+1) d/dx zeta^(n+1)(0, x), by finite differences.

    Five-point central stencil on the high-precision engine; the error is
    taken from the step-halving difference plus engine noise over h.
    """
    ctx = resolve(ctx)
    if n not in (0, 1, 2):
        raise DomainError("stieltjes_via_xderiv supports n in 0..2")
    x = float(x)
    if not x > 0:
        raise DomainError("x must be positive")
    h = 1e-5 * max(1.0, x)
    h = min(h, x / 8)
    with mpmath.workdps(40):
        xm = mpmath.mpf(x)

        def at(dx):
            vals, om, _ = _hurwitz_mp(0.0, xm + dx, ctx.em_order, ctx.max_terms)
            return vals[n + 1], om[n + 1]

        hm = mpmath.mpf(h)
        pts = {}
        noise = mpmath.mpf(0)
        for m in (-4, -2, -1, 1, 2, 4):
            v, o = at(m * hm)
            pts[m] = v
            noise = max(noise, o)

        def stencil(step, a, b):
            return (pts[-b] - 8 * pts[-a] + 8 * pts[a] - pts[b]) / (12 * step)

        d1 = stencil(hm, 1, 2)
        d2 = stencil(2 * hm, 2, 4)
        scale = mpmath.mpf(-1) ** (n + 1) / (n + 1)
        val = scale * d1
        err = abs(scale) * (abs(d1 - d2) / 15 + 3 * noise / hm)
    v = float(val)
    return StieltjesValue(n, x, v, StieltjesMethod.X_DERIVATIVE, float(err) + EPS * abs(v))


def gamma1_prime(x, ctx=None):
    """d/dx gamma_1(x) = zeta(2, x) + zeta'(2, x)."""
    ctx = resolve(ctx)
    x = float(x)
    if not x > 0:
        raise DomainError("x must be positive")
    a = zeta_mp(0, 2.0, x, ctx)
    b = zeta_mp(1, 2.0, x, ctx)
    with mpmath.workdps(40):
        v = a[0] + b[0]
    return RealValue(*_finish(v, a[1] + b[1]))


def _log_g_one_plus(t, ctx):
    # log G(1+t) = t log Gamma(t) + zeta'(-1) - zeta'(-1, t), t > 0
    lg = log_gamma(t, ctx)
    zp1 = zeta_prime_minus1(ctx)
    zt, om = zeta_mp(1, -1.0, t, ctx)
    ztv = float(zt)
    terms = [t * lg.value, zp1.value, -ztv]
    err = abs(t) * lg.err_estimate + zp1.err_estimate + float(om) + EPS * abs(ztv)
    return RealValue(math.fsum(terms), err + 2 * EPS * math.fsum(abs(q) for q in terms))


def barnes_log_g(x, ctx=None):
    """log G(x) for x > 0 (Barnes double gamma), via the Vardi relation."""
    ctx = resolve(ctx)
    x = float(x)
    if not x > 0:
        raise DomainError("x must be positive")
    if x == 1.0:
        return RealValue(0.0, 0.0)
    if x > 1.0:
        return _log_g_one_plus(x - 1.0, ctx)
    # G(x) = G(1+x) / Gamma(x)
    return _log_g_one_plus(x, ctx) - log_gamma(x, ctx)


def barnes_log_g_product(z, ctx=None):
    """log G(1+z) from the Weierstrass product, independent of the engine's
    derivative machinery except for zeta(m, N+1) in the tail."""
    ctx = resolve(ctx)
    z = float(z)
    if not z > -1:
        raise DomainError("z must exceed -1")
    N = 1000
    n = np.arange(1, N + 1, dtype=np.float64)
    body = n * np.log1p(z / n) - z + z * z / (2 * n)
    terms = [0.5 * z * LOG_2PI, -0.5 * z * (1 + z), -0.5 * EULER_GAMMA * z * z]
    terms.extend(body.tolist())
    m = 3
    tail_err = 0.0
    while True:
        t = (-1) ** (m + 1) * z**m / m
        if abs(t) * (N + 1.0) ** (2 - m) < 1e-20:
            tail_err = abs(t) * (N + 1.0) ** (2 - m)
            break
        zz = hurwitz_zeta_deriv(0, m - 1, N + 1.0, ctx)
        terms.append(t * zz.value)
        m += 1
    val = math.fsum(terms)
    return RealValue(val, tail_err + 8 * EPS * math.fsum(abs(q) for q in terms))


@lru_cache(maxsize=None)
def zeta_prime_at_negative_integer(m, em_order=12, max_terms=10**6):
    """zeta'(-m) as an mpf straight from the engine (no functional equation)."""
    vals, om, _ = _hurwitz_mp(float(-m), 1.0, em_order, max_terms)
    return vals[1], om[1]
