"""Series representations of psi, log Gamma, log G, zeta'(-1, t), zeta''(0, u)
and gamma_1(x), evaluated along independent numerical paths.

Notation used below: L = gamma + log 2 pi, and C_j(x, s), S_j(x, s) are the
(regularized) sums of log^j n cos(2 pi n x) / n^s and log^j n sin(2 pi n x) / n^s.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import mpmath

from .context import ConvergenceError, DomainError, RealValue, resolve
from .regsum import TrigKind, TrigSeriesSpec, abel_trig_limit, direct_trig_sum
from .special import EPS, EULER_GAMMA, LOG_2PI, digamma
from .zeta import (
    hurwitz_zeta_deriv,
    riemann_zeta_deriv,
    stieltjes,
    zeta_prime_at_negative_integer,
)

L_CONST = EULER_GAMMA + LOG_2PI
ZETA2 = math.pi**2 / 6


class RepresentationPath(enum.Enum):
    STIELTJES_EXPANSION = "stieltjes_expansion"
    ABEL = "abel"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class RepresentationValue:
    value: float
    err_estimate: float
    path: RepresentationPath

    def as_real(self):
        return RealValue(self.value, self.err_estimate)


def _check_unit(x, name="x"):
    x = float(x)
    if not 0 < x < 1:
        raise DomainError(f"{name} must lie strictly between 0 and 1, got {x!r}")
    return x


def _combine(pairs, const=0.0, const_err=0.0):
    """sum c_i v_i + const for (c_i, RealValue) pairs, with propagated error."""
    terms = [c * v.value for c, v in pairs] + [const]
    val = math.fsum(terms)
    err = math.fsum(abs(c) * v.err_estimate for c, v in pairs) + const_err
    return val, err + 4 * EPS * math.fsum(abs(t) for t in terms)


# --- Stieltjes-expansion path -------------------------------------------------


def _ser_mul(a, b, n):
    return [mpmath.fsum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def _ser_exp(a, n):
    # exp of a power series with a[0] handled separately
    out = [mpmath.exp(a[0])] + [mpmath.mpf(0)] * (n - 1)
    for k in range(1, n):
        out[k] = mpmath.fsum(i * a[i] * out[k - i] for i in range(1, k + 1)) / k
    return out


def hansen_trig_closed(j, x, y=0.0, ctx=None, kind=TrigKind.SIN):
    """lim_{s->0} sum log^j n sin(2 pi n x + y) / n^s from the Hansen closed form.

    The sum equals F(s) = (2 pi)^(s-1) Gamma(1-s) [cos(y - pi s/2) zeta(1-s, x)
    - cos(y + pi s/2) zeta(1-s, 1-x)] and the log^j weight is (-1)^j d^j/ds^j.
    With zeta(1-s, a) = -1/s + sum gamma_m(a) s^m / m! everything is a power
    series in s and the limit is (-1)^j j! [s^j] F.  kind=COS shifts y by pi/2.
    """
    ctx = resolve(ctx)
    if j not in (0, 1, 2):
        raise DomainError("j must be 0, 1 or 2")
    x = _check_unit(x)
    y = float(y)
    if kind is TrigKind.COS:
        y += math.pi / 2
    n = j + 1
    gx = [stieltjes(m, x, ctx) for m in range(n)]
    g1x = [stieltjes(m, 1.0 - x, ctx) for m in range(n)]
    zk = [riemann_zeta_deriv(0, k, ctx) for k in range(2, n + 1)]
    with mpmath.workdps(30):
        pi = mpmath.pi
        ym = mpmath.mpf(y)
        a = [-mpmath.log(2 * pi), mpmath.log(2 * pi) + mpmath.euler]
        a += [mpmath.mpf(z.value) / k for k, z in zip(range(2, n + 1), zk)]
        A = _ser_exp(a[:n], n)
        cp = [mpmath.cos(ym + m * pi / 2) * (pi / 2) ** m / mpmath.factorial(m) for m in range(n + 1)]
        cm = [mpmath.cos(ym + m * pi / 2) * (-pi / 2) ** m / mpmath.factorial(m) for m in range(n + 1)]
        Gx = [mpmath.mpf(g.value) / mpmath.factorial(m) for m, g in enumerate(gx)]
        G1 = [mpmath.mpf(g.value) / mpmath.factorial(m) for m, g in enumerate(g1x)]
        B = [cp[m + 1] - cm[m + 1] for m in range(n)]
        t1 = _ser_mul(cm, Gx, n)
        t2 = _ser_mul(cp, G1, n)
        B = [B[k] + t1[k] - t2[k] for k in range(n)]
        F = _ser_mul(A, B, n)
        scale = (-1) ** j * mpmath.factorial(j)
        val = scale * F[j]
        # linear sensitivity to each gamma_m(x) and gamma_m(1-x)
        Acm = _ser_mul(A, cm, n)
        Acp = _ser_mul(A, cp, n)
        err = mpmath.mpf(0)
        for m in range(n):
            w = abs(scale) / mpmath.factorial(m)
            err += w * (abs(Acm[j - m]) * gx[m].err_estimate + abs(Acp[j - m]) * g1x[m].err_estimate)
        # zeta(k) enters through A only at order >= 2
        err += sum(z.err_estimate for z in zk) * abs(val)
    v = float(val)
    return RepresentationValue(v, float(err) + 8 * EPS * max(1.0, abs(v)),
                               RepresentationPath.STIELTJES_EXPANSION)


# --- shared limit components ----------------------------------------------------


def _abel(j, x, kind, s=0.0, ctx=None):
    return abel_trig_limit(TrigSeriesSpec(j, x, s=s, kind=kind), ctx).as_real()


def _component(j, x, kind, path, ctx):
    """C_j(x, 0) or S_j(x, 0) along the requested path."""
    if path is RepresentationPath.ABEL:
        return _abel(j, x, kind, 0.0, ctx)
    if path is RepresentationPath.STIELTJES_EXPANSION:
        return hansen_trig_closed(j, x, 0.0, ctx, kind).as_real()
    raise DomainError(f"path {path} not available for this representation")


def digamma_fourier(x, ctx=None, path=RepresentationPath.STIELTJES_EXPANSION):
    """psi(x) = -(pi/2) cot pi x + 2 lim sum [gamma + log 2 pi n] cos(2 pi n x) / n^s."""
    ctx = resolve(ctx)
    x = _check_unit(x)
    c0 = _component(0, x, TrigKind.COS, path, ctx)
    c1 = _component(1, x, TrigKind.COS, path, ctx)
    cot = -0.5 * math.pi / math.tan(math.pi * x)
    val, err = _combine([(2 * L_CONST, c0), (2.0, c1)], cot, 4 * EPS * abs(cot))
    return RepresentationValue(val, err, path)


def kummer_log_gamma(u, ctx=None):
    """log Gamma(u) = (1/2) log pi + sum [gamma + log 2 pi n] sin(2 pi n u) / (pi n)
    - (1/2) log sin pi u, the conditionally convergent sums Abel-evaluated."""
    ctx = resolve(ctx)
    u = _check_unit(u, "u")
    s0 = _abel(0, u, TrigKind.SIN, 1.0, ctx)
    s1 = _abel(1, u, TrigKind.SIN, 1.0, ctx)
    const = 0.5 * math.log(math.pi) - 0.5 * math.log(math.sin(math.pi * u))
    val, err = _combine([(L_CONST / math.pi, s0), (1 / math.pi, s1)], const, 4 * EPS * abs(const))
    return RepresentationValue(val, err, RepresentationPath.ABEL)


def gamma1_rep(x, ctx=None, path=RepresentationPath.ABEL):
    """gamma_1(x) as the s -> 0 limit of
    sum [L + log n]^2 cos / n^s - (1/2) zeta(2) sum cos / n^s - pi sum [L + log n] sin / n^s."""
    ctx = resolve(ctx)
    x = _check_unit(x)
    c = [_component(j, x, TrigKind.COS, path, ctx) for j in range(3)]
    s = [_component(j, x, TrigKind.SIN, path, ctx) for j in range(2)]
    pairs = [(L_CONST**2 - 0.5 * ZETA2, c[0]), (2 * L_CONST, c[1]), (1.0, c[2]),
             (-math.pi * L_CONST, s[0]), (-math.pi, s[1])]
    val, err = _combine(pairs)
    return RepresentationValue(val, err, path)


def zeta2_fourier(u, ctx=None, zeta2_coeff=0.5):
    """zeta''(0, u) from its Fourier series; all three sums at s = 1, Abel-evaluated.

    The sine part is sum [L + log n]^2 sin(2 pi n u) / (pi n) - c zeta(2) sum
    sin(2 pi n u) / (pi n).  Integrating 2 gamma_1(x) term by term gives
    c = 1/2; a value of 1/4 is also in circulation, and zeta2_coeff lets the
    two be compared.
    """
    ctx = resolve(ctx)
    u = _check_unit(u, "u")
    s = [_abel(j, u, TrigKind.SIN, 1.0, ctx) for j in range(3)]
    c = [_abel(j, u, TrigKind.COS, 1.0, ctx) for j in range(2)]
    pi = math.pi
    pairs = [((L_CONST**2 - zeta2_coeff * ZETA2) / pi, s[0]), (2 * L_CONST / pi, s[1]), (1 / pi, s[2]),
             (L_CONST, c[0]), (1.0, c[1])]
    val, err = _combine(pairs)
    return RepresentationValue(val, err, RepresentationPath.ABEL)


def _inv_square_sums(t, ctx):
    # sum sin/n^2, sum cos/n^2, sum log n cos/n^2: absolutely convergent
    return (direct_trig_sum(0, t, 2.0, TrigKind.SIN, ctx=ctx),
            direct_trig_sum(0, t, 2.0, TrigKind.COS, ctx=ctx),
            direct_trig_sum(1, t, 2.0, TrigKind.COS, ctx=ctx))


def barnes_fourier(u, ctx=None):
    """log G(1+u) from its Fourier-type series.

    The 1/n sums (conditionally convergent) are Abel-evaluated at s = 1; the
    1/n^2 sums are summed directly, with sum [L + log n] / n^2 = L zeta(2) - zeta'(2).
    """
    ctx = resolve(ctx)
    u = _check_unit(u, "u")
    c0 = _abel(0, u, TrigKind.COS, 1.0, ctx)
    s0 = _abel(0, u, TrigKind.SIN, 1.0, ctx)
    s1 = _abel(1, u, TrigKind.SIN, 1.0, ctx)
    sin2, cos2, logcos2 = _inv_square_sums(u, ctx)
    dz2 = riemann_zeta_deriv(1, 2.0, ctx)
    pi = math.pi
    k = 1 / (2 * pi**2)
    const = 0.5 * u * LOG_2PI - 0.5 * u * (u - 1) - k * L_CONST * ZETA2
    pairs = [(-1 / (4 * pi), sin2), (0.5 * u, c0), (u * L_CONST / pi, s0), (u / pi, s1),
             (k * L_CONST, cos2), (k, logcos2), (k, dz2)]
    val, err = _combine(pairs, const, 4 * EPS * abs(const))
    return RepresentationValue(val, err, RepresentationPath.ABEL)


def zeta_prime_neg1_fourier(t, ctx=None):
    """zeta'(-1, t) from its Fourier series (all 1/n^2 sums, summed directly)."""
    ctx = resolve(ctx)
    t = _check_unit(t, "t")
    sin2, cos2, logcos2 = _inv_square_sums(t, ctx)
    pi = math.pi
    k = 1 / (2 * pi**2)
    pairs = [(1 / (4 * pi), sin2), (-k * (LOG_2PI + EULER_GAMMA - 1), cos2), (-k, logcos2)]
    val, err = _combine(pairs)
    return RepresentationValue(val, err, RepresentationPath.CLOSED_FORM)


# --- Srivastava-Tsumura closed forms ---------------------------------------------


class STForm(enum.Enum):
    COS_PI_3 = "1.6"
    COS_2PI_3 = "1.7"
    COS_PI_2 = "1.8"
    SIN_PI_3 = "1.9"
    SIN_2PI_3 = "1.10"
    SIN_PI_2 = "1.11"


# (kind, x) of the trigonometric sum each closed form represents
ST_SERIES = {
    STForm.COS_PI_3: (TrigKind.COS, 1 / 6),
    STForm.COS_2PI_3: (TrigKind.COS, 1 / 3),
    STForm.COS_PI_2: (TrigKind.COS, 1 / 4),
    STForm.SIN_PI_3: (TrigKind.SIN, 1 / 6),
    STForm.SIN_2PI_3: (TrigKind.SIN, 1 / 3),
    STForm.SIN_PI_2: (TrigKind.SIN, 1 / 4),
}


def srivastava_tsumura(which, s, ctx=None):
    """Closed form in Riemann/Hurwitz zeta for sum trig(n theta) / n^s,
    theta in {pi/3, 2pi/3, pi/2}.  which is an STForm or its label."""
    ctx = resolve(ctx)
    which = STForm(which)
    s = float(s)

    def z(a):
        return hurwitz_zeta_deriv(0, s, a, ctx)

    zs = z(1.0)
    if which is STForm.COS_PI_3:
        c = 0.5 * (6 ** (1 - s) - 3 ** (1 - s) - 2 ** (1 - s) + 1)
        parts = [(c, zs)]
    elif which is STForm.COS_2PI_3:
        parts = [(0.5 * (3 ** (1 - s) - 1), zs)]
    elif which is STForm.COS_PI_2:
        parts = [(2**-s * (2 ** (1 - s) - 1), zs)]
    elif which is STForm.SIN_PI_3:
        r3 = math.sqrt(3)
        parts = [(r3 * (3**-s - 1) / 2, zs), (r3 * 6**-s, z(1 / 6)), (r3 * 6**-s, z(1 / 3))]
    elif which is STForm.SIN_2PI_3:
        r3 = math.sqrt(3)
        parts = [(r3 * (3**-s - 1) / 2, zs), (r3 * 3**-s, z(1 / 3))]
    else:
        parts = [(2**-s - 1, zs), (2 ** (1 - 2 * s), z(0.25))]
    val, err = _combine([(c, v.as_real() if hasattr(v, "as_real") else v) for c, v in parts])
    return RealValue(val, err)


# --- power series in zeta'(-n) ---------------------------------------------------


def odd_zeta_prime_series(theta, ctx=None, term_tol=1e-14, max_n=200):
    """sum_{n>=0} (-1)^(n-1) zeta'(-2n-1) theta^(2n+1) / (2n+1)!, |theta| < 2 pi.

    zeta'(-2n-1) comes straight from the Euler-Maclaurin engine.  Summation
    stops at the first term below term_tol in absolute value.
    """
    ctx = resolve(ctx)
    theta = float(theta)
    if not abs(theta) < 2 * math.pi:
        raise DomainError("series needs |theta| < 2 pi")
    with mpmath.workdps(40):
        th = mpmath.mpf(theta)
        acc = []
        err = mpmath.mpf(0)
        for n in range(max_n):
            d, om = zeta_prime_at_negative_integer(2 * n + 1, ctx.em_order, ctx.max_terms)
            f = th ** (2 * n + 1) / mpmath.factorial(2 * n + 1)
            t = (-1) ** (n - 1) * d * f
            acc.append(t)
            err += om * abs(f)
            if abs(t) < term_tol and n >= 2:
                break
        else:
            raise ConvergenceError(f"zeta'(-2n-1) series did not converge at theta={theta}")
        val = mpmath.fsum(acc)
        # terms decay like (theta / 2 pi)^2 per step
        ratio = (th / (2 * mpmath.pi)) ** 2
        err += abs(acc[-1]) * ratio / (1 - ratio)
    v = float(val)
    return RealValue(v, float(err) + EPS * abs(v))


def even_zeta_prime_series(theta, ctx=None, term_tol=1e-14, max_n=200):
    """sum_{n>=0} (-1)^n zeta'(-2n) theta^(2n) / (2n)!, |theta| < 2 pi."""
    ctx = resolve(ctx)
    theta = float(theta)
    if not abs(theta) < 2 * math.pi:
        raise DomainError("series needs |theta| < 2 pi")
    with mpmath.workdps(40):
        th = mpmath.mpf(theta)
        acc = []
        err = mpmath.mpf(0)
        for n in range(max_n):
            d, om = zeta_prime_at_negative_integer(2 * n, ctx.em_order, ctx.max_terms)
            f = th ** (2 * n) / mpmath.factorial(2 * n)
            t = (-1) ** n * d * f
            acc.append(t)
            err += om * abs(f)
            if abs(t) < term_tol and n >= 2:
                break
        else:
            raise ConvergenceError(f"zeta'(-2n) series did not converge at theta={theta}")
        val = mpmath.fsum(acc)
        ratio = (th / (2 * mpmath.pi)) ** 2
        err += abs(acc[-1]) * ratio / (1 - ratio)
    v = float(val)
    return RealValue(v, float(err) + EPS * abs(v))


def gamma1_reflection_series(x, ctx=None):
    """gamma_1(1-x) - gamma_1(1+x) from the odd zeta'(-2n-1) power series plus
    L [psi(1-x) - psi(1+x)].

    The series ratio is x^2, so it is only used for x <= 1/2; beyond that the
    convergence is too slow to be worth it and ConvergenceError is raised.
    """
    ctx = resolve(ctx)
    x = _check_unit(x)
    if x > 0.5:
        raise ConvergenceError("reflection series converges too slowly for x > 1/2")
    ser = odd_zeta_prime_series(2 * math.pi * x, ctx)
    p1 = digamma(1 - x, ctx)
    p2 = digamma(1 + x, ctx)
    val, err = _combine([(2 * math.pi, ser), (L_CONST, p1), (-L_CONST, p2)])
    return RealValue(val, err)


@dataclass(frozen=True)
class OddZetaSeriesValue:
    value: float
    err_estimate: float
    closed_form: float
    closed_err: float
    agree: bool

    def as_real(self):
        return RealValue(self.value, self.err_estimate)


def zeta_odd_power_series(x, ctx=None):
    """sum_{n>=1} zeta(2n+1) x^(2n) and -(1/2)[psi(1+x) + psi(1-x)] - gamma."""
    ctx = resolve(ctx)
    x = float(x)
    if not abs(x) < 1:
        raise DomainError("|x| must be below 1")
    if abs(x) > 0.95:
        raise ConvergenceError("zeta(2n+1) x^2n converges too slowly for |x| > 0.95")
    terms = []
    err = 0.0
    n = 1
    while True:
        z = riemann_zeta_deriv(0, 2 * n + 1, ctx)
        p = x ** (2 * n)
        terms.append(z.value * p)
        err += z.err_estimate * p
        # zeta(2n+1) -> 1, so the tail is about x^(2n+2) / (1 - x^2)
        tail = x ** (2 * n + 2) * 1.001 / (1 - x * x)
        if tail < 1e-18 or x == 0.0:
            break
        n += 1
    val = math.fsum(terms)
    err += tail + 4 * EPS * math.fsum(abs(t) for t in terms)
    p1 = digamma(1 + x, ctx)
    p2 = digamma(1 - x, ctx)
    cval, cerr = _combine([(-0.5, p1), (-0.5, p2)], -EULER_GAMMA)
    agree = abs(val - cval) <= 4 * (err + cerr) + 1e-12
    return OddZetaSeriesValue(val, err, cval, cerr, agree)


# --- alternating exponential sums ------------------------------------------------


def alt_exp_log_closed(z, ctx=None, k=0, terms=60):
    """Right-hand sides of the expansion of sum (-1)^n n^k e^{-nz} log n.

    k = 0 is the series itself; k = 1 and 2 are -d/dz and d^2/dz^2 of it,
    i.e. sum (-1)^n n e^{-nz} log n and sum (-1)^n n^2 e^{-nz} log n.  The
    Bernoulli part is 2 log 2 (1/(e^{2z} - 1) - 1/(2z)) and its derivatives,
    evaluated in closed form; the zeta'(-n) part is summed as a power series
    (radius pi).
    """
    ctx = resolve(ctx)
    z = float(z)
    if not 0 <= z < math.pi:
        raise DomainError("z must lie in [0, pi)")
    if k not in (0, 1, 2):
        raise DomainError("k must be 0, 1 or 2")
    log2 = math.log(2)
    with mpmath.workdps(40):
        zm = mpmath.mpf(z)

        def bern(t):
            # 1/(e^{2t}-1) - 1/(2t), analytic at t = 0
            if t == 0:
                return mpmath.mpf(-0.5)
            return 1 / mpmath.expm1(2 * t) - 1 / (2 * t)

        b = [bern(zm)]
        if k >= 1:
            b.append(mpmath.diff(bern, zm, 1) if z != 0 else mpmath.mpf(1) / 6)
        if k >= 2:
            b.append(mpmath.diff(bern, zm, 2) if z != 0 else mpmath.mpf(0))
        acc = []
        err = mpmath.mpf(0)
        for n in range(k, terms):
            d, om = zeta_prime_at_negative_integer(n, ctx.em_order, ctx.max_terms)
            c = (-1) ** (n + 1) * (2 ** (n + 1) - 1) / mpmath.factorial(n - k)
            acc.append(c * d * zm ** (n - k))
            err += abs(c) * om * abs(zm) ** (n - k)
        sign = (-1) ** k
        val = sign * (2 * log2 * b[k] + mpmath.fsum(acc))
        err += abs(acc[-1]) + abs(acc[-2])
    v = float(val)
    return RealValue(v, float(err) + 8 * EPS * max(1.0, abs(v)))


def alt_exp_log_integrated(z, ctx=None, terms=60):
    """Right-hand side of the term-wise integral of the k = 0 expansion:
    the integral over (0, z) of sum (-1)^n e^{-nt} log n, which equals
    sum (-1)^n log n / n - sum (-1)^n e^{-nz} log n / n."""
    ctx = resolve(ctx)
    z = float(z)
    if not 0 <= z < math.pi:
        raise DomainError("z must lie in [0, pi)")
    log2 = math.log(2)
    with mpmath.workdps(40):
        zm = mpmath.mpf(z)
        if z == 0:
            bpart = mpmath.mpf(0)
        else:
            # integral_0^z [1/(e^{2t}-1) - 1/(2t)] dt
            bpart = (mpmath.log(-mpmath.expm1(-2 * zm)) - mpmath.log(2 * zm)) / 2
        acc = []
        err = mpmath.mpf(0)
        for n in range(terms):
            d, om = zeta_prime_at_negative_integer(n, ctx.em_order, ctx.max_terms)
            c = (-1) ** (n + 1) * (2 ** (n + 1) - 1) / mpmath.factorial(n + 1)
            acc.append(c * d * zm ** (n + 1))
            err += abs(c) * om * abs(zm) ** (n + 1)
        val = 2 * log2 * bpart + mpmath.fsum(acc)
        err += abs(acc[-1]) + abs(acc[-2])
    v = float(val)
    return RealValue(v, float(err) + 8 * EPS * max(1.0, abs(v)))


def dilcher_alt_log_sum(k, ctx=None):
    """sum_{n>=1} (-1)^n log^k n / n in closed form:
    sum_{j<k} C(k, j) gamma_j log^(k-j) 2 - log^(k+1) 2 / (k+1)."""
    ctx = resolve(ctx)
    if k not in (1, 2, 3):
        raise DomainError("k must be 1, 2 or 3")
    log2 = math.log(2)
    pairs = [(math.comb(k, j) * log2 ** (k - j), stieltjes(j, 1.0, ctx).as_real()) for j in range(k)]
    val, err = _combine(pairs, -(log2 ** (k + 1)) / (k + 1))
    return RealValue(val, err)

