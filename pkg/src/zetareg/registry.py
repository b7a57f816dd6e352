"""Catalog of checkable identities and a runner that evaluates both sides.

Every entry pairs a descriptor (id, title, equation label, parameter domain,
default tolerance) with an evaluator returning (lhs, rhs) as RealValues.  A
case passes when |lhs - rhs| <= max(default_tolerance, 4 (lhs.err + rhs.err)).

Where a printed form of an identity is known to be off (a dropped factor, a
flipped sign, a misprinted constant), the evaluator checks the corrected form
and reports the residual of the printed form in the case note.
"""

from __future__ import annotations

import cmath
import enum
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import mpmath
import numpy as np

from .context import ConvergenceError, DomainError, RealValue, UnknownIdentityError, resolve
from .regsum import (
    TrigKind,
    TrigSeriesSpec,
    _cutoff,
    abel_exp_limit,
    abel_trig_limit,
    direct_trig_sum,
    weighted_trig_sum,
)
from .representations import (
    L_CONST,
    ST_SERIES,
    ZETA2,
    STForm,
    barnes_fourier,
    digamma_fourier,
    dilcher_alt_log_sum,
    even_zeta_prime_series,
    gamma1_reflection_series,
    gamma1_rep,
    hansen_trig_closed,
    kummer_log_gamma,
    odd_zeta_prime_series,
    srivastava_tsumura,
    zeta2_fourier,
    zeta_odd_power_series,
    zeta_prime_neg1_fourier,
    alt_exp_log_closed,
    alt_exp_log_integrated,
)
from .special import (
    EPS,
    EULER_GAMMA,
    LOG_2PI,
    clausen_cl2,
    csum,
    digamma,
    integrate_adaptive,
    log_gamma,
)
from .zeta import (
    alt_zeta_deriv,
    barnes_log_g,
    barnes_log_g_product,
    dirichlet_beta_deriv,
    gamma1_prime,
    hurwitz_zeta_deriv,
    riemann_zeta_deriv,
    stieltjes,
    zeta_prime_minus1,
)

LOG2 = math.log(2.0)
LOG3 = math.log(3.0)
PI = math.pi


class SamplePlan(enum.Enum):
    SMOKE = "smoke"
    FULL = "full"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    title: str
    paper_ref: str
    param_spec: str
    default_tolerance: float


@dataclass
class IdentityCase:
    id: str
    params: dict
    lhs: float
    rhs: float
    residual: float
    tol: float
    passed: bool
    elapsed: float = 0.0
    lhs_err: float = 0.0
    rhs_err: float = 0.0
    note: str = ""

    def as_dict(self):
        """Serializable record; elapsed time is left out so reports are reproducible."""
        return {
            "id": self.id,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "tol": self.tol,
            "pass": self.passed,
            "lhs_err": self.lhs_err,
            "rhs_err": self.rhs_err,
            "note": self.note,
        }


@dataclass(frozen=True)
class _Entry:
    descriptor: IdentityDescriptor
    evaluate: Callable
    domain: dict
    smoke: dict
    grid: tuple = field(default_factory=tuple)


_CATALOG: dict = {}
_ALIASES: dict = {}


def _register(id_, title, ref, domain, tol, smoke, grid=None, aliases=()):
    """domain maps a parameter name to (lo, hi) for an open interval, or to a
    tuple of allowed values."""
    spec = ", ".join(_describe(k, v) for k, v in domain.items()) or "none"

    def deco(fn):
        if id_ in _CATALOG:
            raise ValueError(f"duplicate identity id {id_}")
        g = tuple(grid) if grid is not None else (smoke,)
        _CATALOG[id_] = _Entry(IdentityDescriptor(id_, title, ref, spec, tol), fn, domain, smoke, g)
        for a in aliases:
            _ALIASES[a] = id_
        return fn

    return deco


def _describe(name, dom):
    if isinstance(dom, list):
        return f"{name} in {{{', '.join(repr(v) for v in dom)}}}"
    lo, hi = dom
    return f"{name} in ({lo!r}, {hi!r})"


def _check_domain(entry, params):
    for name, dom in entry.domain.items():
        if name not in params:
            raise DomainError(f"{entry.descriptor.id} needs parameter {name!r}")
        v = float(params[name])
        if isinstance(dom, list):
            if not any(abs(v - a) <= 1e-12 for a in dom):
                raise DomainError(f"{name}={v!r} not allowed for {entry.descriptor.id}")
        elif not dom[0] < v < dom[1]:
            raise DomainError(f"{name}={v!r} outside ({dom[0]}, {dom[1]}) for {entry.descriptor.id}")
    extra = set(params) - set(entry.domain)
    if extra:
        raise DomainError(f"unexpected parameters {sorted(extra)} for {entry.descriptor.id}")


# --- small helpers ----------------------------------------------------------------


def _c(value, err=None):
    """Constant with a rounding-level error."""
    value = float(value)
    return RealValue(value, 4 * EPS * abs(value) if err is None else err)


def _lin(pairs, const=0.0):
    terms = [c * v.value for c, v in pairs] + [const]
    val = math.fsum(terms)
    err = math.fsum(abs(c) * v.err_estimate for c, v in pairs)
    return RealValue(val, err + 4 * EPS * (math.fsum(abs(t) for t in terms) + abs(const)))


def _A(j, x, kind, ctx, s=0.0, y=0.0):
    return abel_trig_limit(TrigSeriesSpec(j, x, y=y, s=s, kind=kind), ctx).as_real()


def _D(j, x, s, kind, ctx, y=0.0):
    return direct_trig_sum(j, x, s, kind, y, ctx)


def _st(n, x, ctx):
    return stieltjes(n, x, ctx).as_real()


def _hz(k, s, x, ctx):
    return hurwitz_zeta_deriv(k, s, x, ctx).as_real()


def _cot(t):
    return math.cos(t) / math.sin(t)


def _note_printed(label, lhs, printed):
    r = abs(lhs.value - printed)
    return f"printed form {label}: residual {r:.3e}"


COS = TrigKind.COS
SIN = TrigKind.SIN

X9 = tuple({"x": round(0.1 * k, 10)} for k in range(1, 10))
U9 = tuple({"u": round(0.1 * k, 10)} for k in range(1, 10))
T9 = tuple({"t": round(0.1 * k, 10)} for k in range(1, 10))
# (0, 1/2) grid avoiding small sin(2 pi x)
XH = tuple({"x": v} for v in (0.05, 0.1, 0.15, 0.2, 0.3, 0.35, 0.4))
XH_COT = tuple({"x": v} for v in (0.1, 0.15, 0.2, 0.3, 0.35, 0.4))
UNIT = {"x": (0.0, 1.0)}
HALF = {"x": (0.0, 0.5)}


# --- limits of trigonometric Dirichlet series ---------------------------------------


@_register("I-1.1", "Difference of first Stieltjes constants as a regularized sine series",
           "(1.1)", UNIT, 1e-8, {"x": 0.3}, X9)
def _i_1_1(p, ctx):
    x = p["x"]
    lhs = _st(1, 1 - x, ctx) - _st(1, x, ctx)
    rhs = _lin([(2 * PI, _A(1, x, SIN, ctx))], PI * L_CONST * _cot(PI * x))
    return lhs, rhs, ""


@_register("I-1.4", "Regularized cosine series sum cos(2 pi n x) = -1/2", "(1.4)",
           UNIT, 1e-9, {"x": 0.3}, X9)
def _i_1_4(p, ctx):
    return _A(0, p["x"], COS, ctx), _c(-0.5), ""


@_register("I-1.5", "Regularized sine series sum sin(2 pi n x) = cot(pi x)/2", "(1.5)",
           UNIT, 1e-9, {"x": 0.3}, X9)
def _i_1_5(p, ctx):
    x = p["x"]
    return _A(0, x, SIN, ctx), _c(0.5 * _cot(PI * x)), ""


_XY = tuple({"x": x, "y": y} for x in (0.1, 0.25, 0.5, 0.75, 0.9) for y in (0.7, -1.3))


@_register("I-1.14", "Phase-shifted sine series limit", "(1.14)",
           {"x": (0.0, 1.0), "y": (-PI, PI)}, 1e-9, {"x": 0.25, "y": 0.7}, _XY)
def _i_1_14(p, ctx):
    x, y = p["x"], p["y"]
    rhs = 0.5 * math.cos(PI * x + y) / math.sin(PI * x)
    return _A(0, x, SIN, ctx, y=y), _c(rhs), ""


@_register("I-1.15", "Phase-shifted cosine series limit", "(1.15)",
           {"x": (0.0, 1.0), "y": (-PI, PI)}, 1e-9, {"x": 0.25, "y": 0.7}, _XY)
def _i_1_15(p, ctx):
    x, y = p["x"], p["y"]
    rhs = -0.5 * math.sin(PI * x + y) / math.sin(PI * x)
    return _A(0, x, COS, ctx, y=y), _c(rhs), ""


@_register("I-1.16", "Regularized alternating series sum (-1)^n = -1/2", "(1.16)", {}, 1e-9, {})
def _i_1_16(p, ctx):
    return _A(0, 0.5, COS, ctx), _c(-0.5), ""


@_register("I-2.4", "Cosine series limit from the Hurwitz functional equation", "(2.4)",
           UNIT, 1e-9, {"x": 0.3}, X9)
def _i_2_4(p, ctx):
    return hansen_trig_closed(0, p["x"], 0.0, ctx, COS).as_real(), _c(-0.5), ""


@_register("I-2.7", "Sine series limit from the Hurwitz functional equation", "(2.7)",
           UNIT, 1e-9, {"x": 0.3}, X9)
def _i_2_7(p, ctx):
    x = p["x"]
    return hansen_trig_closed(0, x, 0.0, ctx, SIN).as_real(), _c(0.5 * _cot(PI * x)), ""


# --- Srivastava-Tsumura closed forms ----------------------------------------------------

_ST_S = (0.0, 0.5, 1.5, 2.0, 3.0)


def _st_factory(form):
    kind, x = ST_SERIES[form]

    def fn(p, ctx):
        s = p["s"]
        if s == 0.0:
            lhs = _A(0, x, kind, ctx)
        else:
            lhs = _D(0, x, s, kind, ctx)
        return lhs, srivastava_tsumura(form, s, ctx), ""

    return fn


_ST_TITLES = {
    STForm.COS_PI_3: "sum cos(n pi/3)/n^s in Riemann zeta",
    STForm.COS_2PI_3: "sum cos(2n pi/3)/n^s in Riemann zeta",
    STForm.COS_PI_2: "sum cos(n pi/2)/n^s in Riemann zeta",
    STForm.SIN_PI_3: "sum sin(n pi/3)/n^s in Hurwitz zeta",
    STForm.SIN_2PI_3: "sum sin(2n pi/3)/n^s in Hurwitz zeta",
    STForm.SIN_PI_2: "sum sin(n pi/2)/n^s in Hurwitz zeta",
}

for _form in STForm:
    _register(f"I-{_form.value}", _ST_TITLES[_form], f"({_form.value})", {"s": list(_ST_S)},
              1e-10, {"s": 2.0}, tuple({"s": s} for s in _ST_S))(_st_factory(_form))


# --- digamma representations ------------------------------------------------------------


@_register("I-2.6", "Digamma as a regularized cosine/sine series", "(2.6)", UNIT, 1e-8,
           {"x": 0.3}, X9)
def _i_2_6(p, ctx):
    x = p["x"]
    rhs = _lin([(2 * L_CONST, _A(0, x, COS, ctx)), (2.0, _A(1, x, COS, ctx)),
                (-PI, _A(0, x, SIN, ctx))])
    return digamma(x, ctx), rhs, ""


@_register("I-2.8", "Digamma with the log n cosine series", "(2.8)", UNIT, 1e-8,
           {"x": 0.3}, X9)
def _i_2_8(p, ctx):
    x = p["x"]
    rhs = _lin([(2.0, _A(1, x, COS, ctx))], -L_CONST - 0.5 * PI * _cot(PI * x))
    return digamma(x, ctx), rhs, ""


@_register("I-2.8.1", "Digamma Fourier form with [gamma + log 2 pi n] weights", "(2.8.1)",
           UNIT, 1e-9, {"x": 0.3}, X9)
def _i_2_8_1(p, ctx):
    x = p["x"]
    return digamma(x, ctx), digamma_fourier(x, ctx).as_real(), ""


def _log1p_inv(n):
    return np.log1p(1.0 / n)


def _log1p_inv_mp(n):
    return mpmath.log1p(1 / n)


def _lerch_sine_sum(x):
    # sum_{n>=1} sin((2n+1) pi x) log(1 + 1/n)
    return weighted_trig_sum(_log1p_inv, _log1p_inv_mp, x, SIN, y=PI * x)


@_register("I-2.10", "Lerch trigonometric expansion of psi(x) sin(pi x)", "(2.10)",
           UNIT, 1e-9, {"x": 0.3}, X9)
def _i_2_10(p, ctx):
    x = p["x"]
    lhs = digamma(x, ctx).scale(math.sin(PI * x))
    rhs = _lin([(-1.0, _lerch_sine_sum(x))], -L_CONST * math.sin(PI * x) - 0.5 * PI * math.cos(PI * x))
    return lhs, rhs, ""


@_register("I-2.11", "Lerch sine series against the regularized log n cosine series", "(2.11)",
           UNIT, 1e-8, {"x": 0.3}, X9)
def _i_2_11(p, ctx):
    x = p["x"]
    lhs = -_lerch_sine_sum(x)
    rhs = _A(1, x, COS, ctx).scale(2 * math.sin(PI * x))
    return lhs, rhs, ""


# --- integral identities -----------------------------------------------------------------


@_register("I-2.12", "Cosine series with log(1+1/n) against log n/(4n^2-1) series", "(2.12)",
           {"u": (0.0, 1.0)}, 1e-9, {"u": 0.3}, U9)
def _i_2_12(p, ctx):
    u = p["u"]
    lhs = weighted_trig_sum(lambda n: np.log1p(1.0 / n) / (2 * n + 1),
                            lambda n: mpmath.log1p(1 / n) / (2 * n + 1), u, COS, y=PI * u)
    a = weighted_trig_sum(lambda n: 2 * n * np.log(n) / (4 * n * n - 1),
                          lambda n: 2 * n * mpmath.log(n) / (4 * n * n - 1), u, SIN)
    b = weighted_trig_sum(lambda n: np.log(n) / (4 * n * n - 1),
                          lambda n: mpmath.log(n) / (4 * n * n - 1), u, COS)
    rhs = _lin([(2 * math.sin(PI * u), a), (2 * math.cos(PI * u), b)])
    return lhs, rhs, ""


@_register("I-2.13", "Alternating log(1+1/n) series at u = 1/4", "(2.13)", {}, 1e-9, {})
def _i_2_13(p, ctx):
    # cos(2 pi n / 2) = (-1)^n turns each alternating sum into a cosine series at x = 1/2
    a = weighted_trig_sum(lambda n: np.log1p(1 / (2 * n)) / (4 * n + 1),
                          lambda n: mpmath.log1p(1 / (2 * n)) / (4 * n + 1), 0.5, COS)
    b = weighted_trig_sum(lambda n: np.log1p(1 / (2 * n + 1)) / (4 * n + 3),
                          lambda n: mpmath.log1p(1 / (2 * n + 1)) / (4 * n + 3), 0.5, COS, n0=0)
    c = weighted_trig_sum(lambda n: 2 * (2 * n + 1) * np.log(2 * n + 1) / (4 * (2 * n + 1) ** 2 - 1),
                          lambda n: 2 * (2 * n + 1) * mpmath.log(2 * n + 1) / (4 * (2 * n + 1) ** 2 - 1),
                          0.5, COS, n0=0)
    d = weighted_trig_sum(lambda n: np.log(2 * n) / (16 * n * n - 1),
                          lambda n: mpmath.log(2 * n) / (16 * n * n - 1), 0.5, COS)
    return a - b, _lin([(2.0, c), (2.0, d)]), ""


def _log_over_4n2(ctx):
    # sum log n / (4 n^2 - 1) = -sum_k 4^-k zeta'(2k)
    terms = []
    err = 0.0
    for k in range(1, 40):
        d = riemann_zeta_deriv(1, 2 * k, ctx)
        terms.append(-(4.0**-k) * d.value)
        err += 4.0**-k * d.err_estimate
        if abs(terms[-1]) < 1e-20:
            break
    return RealValue(math.fsum(terms), err + abs(terms[-1]) + 4 * EPS * abs(math.fsum(terms)))


def _psi_f(ctx):
    return lambda t: digamma(t, ctx).value


@_register("I-2.14", "Integral of psi(x) sin(pi x) over (0, 1)", "(2.14)", {}, 1e-9, {})
def _i_2_14(p, ctx):
    psi = _psi_f(ctx)
    lhs = integrate_adaptive(lambda t: psi(t) * math.sin(PI * t), 0.0, 1.0, ctx.quad_tol, ctx)
    rhs = _lin([(-4 / PI, _log_over_4n2(ctx))], -2 / PI * L_CONST)
    return lhs, rhs, ""


@_register("I-2.15", "Fourier sine coefficients of psi on (0, 1)", "(2.15)",
           {"k": [1.0, 2.0, 3.0, 4.0]}, 1e-9, {"k": 1.0},
           tuple({"k": float(k)} for k in (1, 2, 3, 4)))
def _i_2_15(p, ctx):
    k = int(p["k"])
    psi = _psi_f(ctx)
    lhs = integrate_adaptive(lambda t: psi(t) * math.sin(2 * k * PI * t), 0.0, 1.0, ctx.quad_tol, ctx)
    return lhs, _c(-PI / 2), ""


# --- Landau family and duplication -----------------------------------------------------------

_XS = tuple({"x": x, "s": s} for x in (0.1, 0.2, 0.3, 0.4) for s in (1.5, 2.0)) + (
    {"x": 0.15, "s": 3.0}, {"x": 0.35, "s": 1.0})
XS_DOM = {"x": (0.0, 0.5), "s": (0.05, 10.0)}


@_register("I-3.1", "Landau's relation for sum log n cos(2 pi n x)/n", "(3.1)", HALF, 1e-9,
           {"x": 0.2}, XH_COT)
def _i_3_1(p, ctx):
    x = p["x"]
    lhs = _D(1, x + 0.5, 1.0, COS, ctx)
    rhs = _lin([(1.0, _D(1, 2 * x, 1.0, COS, ctx)), (-1.0, _D(1, x, 1.0, COS, ctx))],
               -LOG2 * math.log(2 * math.sin(2 * PI * x)))
    return lhs, rhs, ""


@_register("I-3.2", "Half-shift relation for f_s(x) = sum log n cos(2 pi n x)/n^s", "(3.2)",
           XS_DOM, 1e-9, {"x": 0.2, "s": 2.0}, _XS)
def _i_3_2(p, ctx):
    x, s = p["x"], p["s"]
    f = 2 ** (1 - s)
    lhs = _D(1, x + 0.5, s, COS, ctx)
    rhs = _lin([(f, _D(1, 2 * x, s, COS, ctx)), (-1.0, _D(1, x, s, COS, ctx)),
                (f * LOG2, _D(0, 2 * x, s, COS, ctx))])
    return lhs, rhs, ""


@_register("I-3.3", "Half-shift relation for sum cos(2 pi n x)/n^s", "(3.3)", XS_DOM, 1e-10,
           {"x": 0.2, "s": 2.0}, _XS)
def _i_3_3(p, ctx):
    x, s = p["x"], p["s"]
    lhs = _D(0, x + 0.5, s, COS, ctx)
    rhs = _lin([(2 ** (1 - s), _D(0, 2 * x, s, COS, ctx)), (-1.0, _D(0, x, s, COS, ctx))])
    return lhs, rhs, ""


@_register("I-3.4", "Half-shift relation for sum sin(2 pi n x)/n^s", "(3.4)", XS_DOM, 1e-10,
           {"x": 0.2, "s": 2.0}, _XS)
def _i_3_4(p, ctx):
    x, s = p["x"], p["s"]
    lhs = _D(0, x + 0.5, s, SIN, ctx)
    rhs = _lin([(2 ** (1 - s), _D(0, 2 * x, s, SIN, ctx)), (-1.0, _D(0, x, s, SIN, ctx))])
    return lhs, rhs, ""


@_register("I-3.6", "Duplication formula for the digamma function", "(3.6)", HALF, 1e-9,
           {"x": 0.2}, XH)
def _i_3_6(p, ctx):
    x = p["x"]
    lhs = digamma(x + 0.5, ctx)
    rhs = _lin([(2.0, digamma(2 * x, ctx)), (-1.0, digamma(x, ctx))], -2 * LOG2)
    return lhs, rhs, ""


@_register("I-4.1", "Half-shift relation for g_s(x) = sum log n sin(2 pi n x)/n^s", "(4.1)",
           XS_DOM, 1e-9, {"x": 0.2, "s": 2.0}, _XS)
def _i_4_1(p, ctx):
    x, s = p["x"], p["s"]
    f = 2 ** (1 - s)
    lhs = _D(1, x + 0.5, s, SIN, ctx)
    rhs = _lin([(f, _D(1, 2 * x, s, SIN, ctx)), (-1.0, _D(1, x, s, SIN, ctx)),
                (f * LOG2, _D(0, 2 * x, s, SIN, ctx))])
    return lhs, rhs, ""


def _g1_dup(x, ctx):
    # gamma_1(x + 1/2) from the duplication relation
    return _lin([(2.0, _st(1, 2 * x, ctx)), (-1.0, _st(1, x, ctx)), (2 * LOG2, digamma(2 * x, ctx))],
                -LOG2**2)


@_register("I-4.2", "Reflection-type functional equation for the first Stieltjes constant",
           "(4.2)", HALF, 1e-9, {"x": 0.2}, XH_COT)
def _i_4_2(p, ctx):
    x = p["x"]
    lhs = _st(1, 0.5 - x, ctx) - _g1_dup(x, ctx)
    rhs = _lin([(-2.0, _st(1, 2 * x, ctx)), (2.0, _st(1, 1 - 2 * x, ctx)),
                (1.0, _st(1, x, ctx)), (-1.0, _st(1, 1 - x, ctx))],
               2 * PI * LOG2 * _cot(2 * PI * x))
    return lhs, rhs, ""


# --- Kummer's series and Lerch's identity ---------------------------------------------------


@_register("I-5.1", "Kummer-type series for log Gamma with a cosine part", "(5.1)",
           {"u": (0.0, 1.0)}, 1e-8, {"u": 0.3}, U9)
def _i_5_1(p, ctx):
    u = p["u"]
    rhs = _lin([(L_CONST / PI, _A(0, u, SIN, ctx, 1.0)), (1 / PI, _A(1, u, SIN, ctx, 1.0)),
                (0.5, _A(0, u, COS, ctx, 1.0))], 0.5 * math.log(PI) + 0.5 * LOG2)
    return log_gamma(u, ctx), rhs, ""


@_register("I-5.2", "Fourier series of log(2 sin pi u)", "(5.2)", {"u": (0.0, 1.0)}, 1e-9,
           {"u": 0.3}, U9)
def _i_5_2(p, ctx):
    u = p["u"]
    return _c(math.log(2 * math.sin(PI * u))), -_A(0, u, COS, ctx, 1.0), ""


@_register("I-5.3", "Fourier series of pi(u - 1/2)", "(5.3)", {"u": (0.0, 1.0)}, 1e-9,
           {"u": 0.3}, U9)
def _i_5_3(p, ctx):
    u = p["u"]
    return _c(PI * (u - 0.5)), -_A(0, u, SIN, ctx, 1.0), ""


@_register("I-5.4", "Kummer's series for log Gamma with a linear term", "(5.4)",
           {"u": (0.0, 1.0)}, 1e-8, {"u": 0.3}, U9)
def _i_5_4(p, ctx):
    u = p["u"]
    const = 0.5 * math.log(PI) - (u - 0.5) * L_CONST - 0.5 * math.log(math.sin(PI * u))
    rhs = _lin([(1 / PI, _A(1, u, SIN, ctx, 1.0))], const)
    return log_gamma(u, ctx), rhs, ""


@_register("I-5.5", "Kummer's Fourier series for log Gamma", "(5.5)", {"u": (0.0, 1.0)}, 1e-8,
           {"u": 0.3}, U9)
def _i_5_5(p, ctx):
    u = p["u"]
    return log_gamma(u, ctx), kummer_log_gamma(u, ctx).as_real(), ""


@_register("I-5.6", "Lerch's identity zeta'(0, x) = log Gamma(x) - log(2 pi)/2", "(5.6)",
           UNIT, 1e-10, {"x": 0.3}, X9)
def _i_5_6(p, ctx):
    x = p["x"]
    return _hz(1, 0.0, x, ctx), log_gamma(x, ctx) - 0.5 * LOG_2PI, ""


# --- Barnes double gamma -----------------------------------------------------------------


@_register("I-6.1", "Fourier-type series for log G(1+u)", "(6.1)", {"u": (0.0, 1.0)}, 1e-8,
           {"u": 0.3}, U9)
def _i_6_1(p, ctx):
    u = p["u"]
    return barnes_fourier(u, ctx).as_real(), barnes_log_g_product(u, ctx), ""


@_register("I-6.4", "Integral of x psi(x) in terms of log G", "(6.4)", {"u": (0.0, 1.0)}, 1e-9,
           {"u": 0.3}, U9)
def _i_6_4(p, ctx):
    u = p["u"]
    psi = _psi_f(ctx)
    lhs = integrate_adaptive(lambda t: t * psi(t), 0.0, u, ctx.quad_tol, ctx)
    rhs = barnes_log_g_product(u, ctx) + (-0.5 * u * LOG_2PI + 0.5 * u * (u - 1))
    return lhs, rhs, ""


@_register("I-6.6", "Integral of x cot(pi x) as Fourier series", "(6.6)", {"u": (0.0, 1.0)},
           1e-9, {"u": 0.3}, U9)
def _i_6_6(p, ctx):
    u = p["u"]
    lhs = integrate_adaptive(lambda t: t * _cot(PI * t) if t > 0 else 1 / PI, 0.0, u,
                             ctx.quad_tol, ctx)
    rhs = _lin([(1 / (2 * PI**2), clausen_cl2(2 * PI * u, ctx)),
                (-u / PI, _A(0, u, COS, ctx, 1.0))])
    return lhs, rhs, ""


@_register("I-6.7", "Value of log G(1/2)", "(6.7)", {}, 1e-10, {})
def _i_6_7(p, ctx):
    rhs = _lin([(1.5, zeta_prime_minus1(ctx))], LOG2 / 24 - 0.25 * math.log(PI))
    return barnes_log_g_product(-0.5, ctx), rhs, ""


def _inv_sq(t, ctx):
    return _D(0, t, 2.0, SIN, ctx), _D(0, t, 2.0, COS, ctx), _D(1, t, 2.0, COS, ctx)


@_register("I-6.9", "Fourier series of log G(1+t) - t log Gamma(t)", "(6.9)", {"t": (0.0, 1.0)},
           1e-10, {"t": 0.3}, T9)
def _i_6_9(p, ctx):
    t = p["t"]
    lhs = barnes_log_g_product(t, ctx) - log_gamma(t, ctx).scale(t)
    s2, c2, lc2 = _inv_sq(t, ctx)
    k = 1 / (2 * PI**2)
    rhs = _lin([(-1 / (4 * PI), s2), (k * (LOG_2PI + EULER_GAMMA - 1), c2), (k, lc2),
                (1.0, zeta_prime_minus1(ctx))])
    return lhs, rhs, ""


@_register("I-6.10", "Fourier series of zeta'(-1, t)", "(6.10)", {"t": (0.0, 1.0)}, 1e-10,
           {"t": 0.3}, T9)
def _i_6_10(p, ctx):
    t = p["t"]
    return zeta_prime_neg1_fourier(t, ctx).as_real(), _hz(1, -1.0, t, ctx), ""


@_register("I-6.11", "Vardi's relation between log G, log Gamma and zeta'(-1, t)", "(6.11)",
           {"t": (0.0, 1.0)}, 1e-10, {"t": 0.3}, T9)
def _i_6_11(p, ctx):
    t = p["t"]
    lhs = barnes_log_g_product(t, ctx) - log_gamma(t, ctx).scale(t)
    return lhs, zeta_prime_minus1(ctx) - _hz(1, -1.0, t, ctx), ""


# --- Stieltjes constants -----------------------------------------------------------------


@_register("I-7.1", "First Stieltjes constant as a regularized Fourier series", "(7.1)/(7.2)",
           UNIT, 1e-8, {"x": 0.3}, X9, aliases=("I-7.2",))
def _i_7_1(p, ctx):
    x = p["x"]
    return gamma1_rep(x, ctx).as_real(), _st(1, x, ctx), ""


_PQ = tuple({"p": float(pp), "q": float(q)} for pp in (0, 1, 2) for q in (2, 3, 4, 5))


@_register("I-7.5", "Sum rule for Stieltjes constants at rationals r/q", "(7.5)",
           {"p": [0.0, 1.0, 2.0], "q": [2.0, 3.0, 4.0, 5.0, 6.0]}, 1e-9, {"p": 1.0, "q": 2.0}, _PQ)
def _i_7_5(p, ctx):
    pp, q = int(p["p"]), int(p["q"])
    lhs = RealValue(0.0, 0.0)
    for r in range(1, q):
        lhs = lhs + _st(pp, r / q, ctx)
    lq = math.log(q)
    pairs = [(-1.0, _st(pp, 1.0, ctx))]
    for j in range(pp + 1):
        pairs.append((q * math.comb(pp, j) * (-1) ** j * lq**j, _st(pp - j, 1.0, ctx)))
    rhs = _lin(pairs, q * (-1) ** pp * lq ** (pp + 1) / (pp + 1))
    return lhs, rhs, ""


@_register("I-7.6", "gamma_1(1/2) in terms of gamma_1 and gamma", "(7.6)", {}, 1e-10, {})
def _i_7_6(p, ctx):
    rhs = _st(1, 1.0, ctx) + (-LOG2**2 - 2 * EULER_GAMMA * LOG2)
    return _st(1, 0.5, ctx), rhs, ""


@_register("I-7.7", "gamma_1 in terms of zeta''(0)", "(7.7)", {}, 1e-10, {})
def _i_7_7(p, ctx):
    rhs = _hz(2, 0.0, 1.0, ctx) + (L_CONST * LOG_2PI - 0.5 * (L_CONST**2 - 0.5 * ZETA2))
    return _st(1, 1.0, ctx), rhs, ""


def _g1_quarter_closed(ctx):
    lg = log_gamma(0.25, ctx)
    const = 0.5 * (-7 * LOG2**2 - 6 * EULER_GAMMA * LOG2) - 0.5 * PI * (
        EULER_GAMMA + 4 * LOG2 + 3 * math.log(PI))
    return _lin([(1.0, _st(1, 1.0, ctx)), (2 * PI, lg)], const)


@_register("I-7.16", "gamma_1(1/4) in closed form", "(7.16)", {}, 1e-10, {})
def _i_7_16(p, ctx):
    return _st(1, 0.25, ctx), _g1_quarter_closed(ctx), ""


@_register("I-7.17", "Odd part gamma_1(x) - gamma_1(1-x) as a sine series", "(7.17)", UNIT, 1e-8,
           {"x": 0.3}, X9)
def _i_7_17(p, ctx):
    x = p["x"]
    lhs = _st(1, x, ctx) - _st(1, 1 - x, ctx)
    rhs = _lin([(-2 * PI * L_CONST, _A(0, x, SIN, ctx)), (-2 * PI, _A(1, x, SIN, ctx))])
    return lhs, rhs, ""


@_register("I-7.18", "Even part gamma_1(x) + gamma_1(1-x) as a cosine series", "(7.18)", UNIT,
           1e-8, {"x": 0.3}, X9)
def _i_7_18(p, ctx):
    x = p["x"]
    lhs = _st(1, x, ctx) + _st(1, 1 - x, ctx)
    c = [_A(j, x, COS, ctx) for j in range(3)]
    sq = _lin([(L_CONST**2, c[0]), (2 * L_CONST, c[1]), (1.0, c[2])])
    # sum of the two cosine parts counts the squared series twice
    rhs = _lin([(2.0, sq), (-ZETA2, c[0])])
    printed = sq.value - ZETA2 * c[0].value
    return lhs, rhs, _note_printed("(squared series counted once)", lhs, printed)


@_register("I-7.19", "Functional equation for the first Stieltjes constant (duplication)",
           "(7.19)/(7.20)", HALF, 1e-9, {"x": 0.2}, XH, aliases=("I-7.20",))
def _i_7_19(p, ctx):
    x = p["x"]
    return _st(1, x + 0.5, ctx), _g1_dup(x, ctx), ""


_S_HZ = (-1.5, 0.5, 2.0, 3.0)


@_register("I-7.21", "Duplication for the Hurwitz zeta function", "(7.21)",
           {"x": (0.0, 0.5), "s": list(_S_HZ)}, 1e-10, {"x": 0.2, "s": 2.0},
           tuple({"x": x, "s": s} for x in (0.1, 0.2, 0.3, 0.4) for s in _S_HZ))
def _i_7_21(p, ctx):
    x, s = p["x"], p["s"]
    rhs = _lin([(2**s, _hz(0, s, 2 * x, ctx)), (-1.0, _hz(0, s, x, ctx))])
    return _hz(0, s, x + 0.5, ctx), rhs, ""


_S_ALT = (-1.5, -0.5, 0.5)


@_register("I-7.23", "Fourier series of the alternating Hurwitz zeta function", "(7.23)",
           {"t": (0.0, 1.0), "s": list(_S_ALT)}, 1e-9, {"t": 0.3, "s": -0.5},
           tuple({"t": t, "s": s} for t in (0.2, 0.3, 0.7) for s in _S_ALT))
def _i_7_23(p, ctx):
    t, s = p["t"], p["s"]
    f = 2.0**-s
    lhs = _lin([(f, _hz(0, s, t / 2, ctx)), (-f, _hz(0, s, (1 + t) / 2, ctx))])
    sig = 1 - s
    # sums over odd m = all m at x = t/2 minus 2^-sig times all m at x = t
    odd_c = _lin([(1.0, _D(0, t / 2, sig, COS, ctx)), (-(2.0**-sig), _D(0, t, sig, COS, ctx))])
    odd_s = _lin([(1.0, _D(0, t / 2, sig, SIN, ctx)), (-(2.0**-sig), _D(0, t, sig, SIN, ctx))])
    # collecting the odd terms of Hurwitz's formula leaves pi^(s-1) in front
    k = 2 * math.gamma(1 - s) * PI ** (s - 1)
    rhs = _lin([(k * math.sin(PI * s / 2), odd_c), (k * math.cos(PI * s / 2), odd_s)])
    return lhs, rhs, _note_printed("(pi^(1-s) prefactor)", lhs, rhs.value * PI ** (2 * sig))


@_register("I-β0", "Dirichlet beta at 0 as a regularized alternating series", "(7.14)", {},
           1e-9, {})
def _i_beta0(p, ctx):
    # sum_{n>=0} (-1)^n / (2n+1)^s is sum_m sin(m pi/2) / m^s
    lhs = _A(0, 0.25, SIN, ctx)
    rhs = dirichlet_beta_deriv(0, 0.0, ctx)
    return lhs, rhs, _note_printed("(-beta(0))", lhs, -rhs.value)


@_register("I-7.15", "Regularized alternating log(2n+1) series equals -beta'(0)", "(7.15)", {},
           1e-9, {})
def _i_7_15(p, ctx):
    return _A(1, 0.25, SIN, ctx), -dirichlet_beta_deriv(1, 0.0, ctx), ""


@_register("I-β'0", "beta'(0) in terms of log Gamma(1/4)", "unnumbered, after (7.13)", {}, 1e-10, {})
def _i_beta_p0(p, ctx):
    rhs = _lin([(2.0, log_gamma(0.25, ctx))], -math.log(PI) - 1.5 * LOG2)
    return dirichlet_beta_deriv(1, 0.0, ctx), rhs, ""


@_register("I-β'1", "Malmsten's closed form for beta'(1)", "unnumbered, after (7.15)", {}, 1e-10, {})
def _i_beta_p1(p, ctx):
    rhs = _lin([(-PI, log_gamma(0.25, ctx))],
               0.25 * PI * (EULER_GAMMA + 2 * LOG2 + 3 * math.log(PI)))
    return dirichlet_beta_deriv(1, 1.0, ctx), rhs, ""


# --- zeta''(0, u) family --------------------------------------------------------------------


def _z2(u, ctx):
    return _hz(2, 0.0, u, ctx)


@_register("I-8.1", "Fourier series of zeta''(0, u)", "(8.1)", {"u": (0.0, 1.0)}, 1e-8,
           {"u": 0.3}, U9)
def _i_8_1(p, ctx):
    u = p["u"]
    lhs = zeta2_fourier(u, ctx).as_real()
    printed = zeta2_fourier(u, ctx, zeta2_coeff=0.25).value
    rhs = _z2(u, ctx)
    return lhs, rhs, _note_printed("(zeta(2)/4 coefficient)", rhs, printed)


@_register("I-8.4", "Even part of zeta''(0, u) as a cosine series", "(8.4)", {"u": (0.0, 1.0)},
           1e-8, {"u": 0.3}, U9)
def _i_8_4(p, ctx):
    u = p["u"]
    lhs = _lin([(L_CONST, _A(0, u, COS, ctx, 1.0)), (1.0, _A(1, u, COS, ctx, 1.0))])
    rhs = _lin([(0.5, _z2(u, ctx)), (0.5, _z2(1 - u, ctx))])
    return lhs, rhs, ""


@_register("I-8.5", "Odd part of zeta''(0, u) as a sine series", "(8.5)", {"u": (0.0, 1.0)},
           1e-8, {"u": 0.3}, U9)
def _i_8_5(p, ctx):
    u = p["u"]
    lhs = _lin([(0.5, _z2(u, ctx)), (-0.5, _z2(1 - u, ctx))])
    s = [_A(j, u, SIN, ctx, 1.0) for j in range(3)]
    sq = _lin([(L_CONST**2 / PI, s[0]), (2 * L_CONST / PI, s[1]), (1 / PI, s[2])])
    rhs = sq - s[0].scale(0.5 * ZETA2 / PI)
    printed = sq.value - 0.25 * ZETA2 / PI * s[0].value
    return lhs, rhs, _note_printed("(zeta(2)/4 coefficient)", lhs, printed)


@_register("I-8.6", "Even part of zeta''(0, u) with the log n cosine series", "(8.6)",
           {"u": (0.0, 1.0)}, 1e-8, {"u": 0.3}, U9)
def _i_8_6(p, ctx):
    u = p["u"]
    lhs = _lin([(0.5, _z2(u, ctx)), (0.5, _z2(1 - u, ctx))])
    rhs = _A(1, u, COS, ctx, 1.0) - L_CONST * math.log(2 * math.sin(PI * u))
    return lhs, rhs, ""


_QS = tuple({"q": float(q), "s": s} for q in (2, 3, 4) for s in (-1.5, 0.5, 2.0))


@_register("I-8.7", "Sum of Hurwitz zeta over r/q", "(8.7)",
           {"q": [2.0, 3.0, 4.0, 5.0, 6.0], "s": (-10.0, 10.0)}, 1e-10, {"q": 3.0, "s": 2.0}, _QS)
def _i_8_7(p, ctx):
    q, s = int(p["q"]), p["s"]
    lhs = RealValue(0.0, 0.0)
    for r in range(1, q):
        lhs = lhs + _hz(0, s, r / q, ctx)
    return lhs, _hz(0, s, 1.0, ctx).scale(q**s - 1), ""


@_register("I-8.8", "sum log n cos(2 n pi/3)/n in closed form", "(8.8)", {}, 1e-9, {})
def _i_8_8(p, ctx):
    return _A(1, 1 / 3, COS, ctx, 1.0), _c(0.5 * (EULER_GAMMA - 0.5 * LOG3) * LOG3), ""


@_register("I-8.10", "sum log^2 n cos(2 n pi/3)/n in closed form", "(8.10)", {}, 1e-9, {})
def _i_8_10(p, ctx):
    lhs = _A(2, 1 / 3, COS, ctx, 1.0).scale(2.0)
    g1 = _st(1, 1.0, ctx)
    base = -(LOG3**3) / 3 + EULER_GAMMA * LOG3**2
    rhs_log3 = _lin([(2 * LOG3, g1)], base)
    rhs_log2 = _lin([(2 * LOG2, g1)], base)
    r3 = abs(lhs.value - rhs_log3.value)
    r2 = abs(lhs.value - rhs_log2.value)
    note = f"2 gamma_1 log 3 form: residual {r3:.3e}; 2 gamma_1 log 2 form: residual {r2:.3e}"
    return lhs, rhs_log3, note


@_register("I-8.11", "Half-shift relation for zeta''(0, x) (Fourier-series sides)",
           "(8.11)/(8.14)", HALF, 1e-8, {"x": 0.2}, XH, aliases=("I-8.14",))
def _i_8_11(p, ctx):
    x = p["x"]
    lhs = zeta2_fourier(x + 0.5, ctx).as_real()
    rhs = _lin([(1.0, zeta2_fourier(2 * x, ctx).as_real()), (-1.0, zeta2_fourier(x, ctx).as_real()),
                (2 * LOG2, log_gamma(2 * x, ctx))],
               -LOG2 * LOG_2PI + LOG2**2 * (0.5 - 2 * x))
    return lhs, rhs, ""


@_register("I-8.13", "Half-shift relation for zeta''(0, x) via zeta(0, 2x) and zeta'(0, 2x)",
           "(8.13)", HALF, 1e-10, {"x": 0.2}, XH)
def _i_8_13(p, ctx):
    x = p["x"]
    rhs = _lin([(LOG2**2, _hz(0, 0.0, 2 * x, ctx)), (2 * LOG2, _hz(1, 0.0, 2 * x, ctx)),
                (1.0, _hz(2, 0.0, 2 * x, ctx)), (-1.0, _hz(2, 0.0, x, ctx))])
    return _hz(2, 0.0, x + 0.5, ctx), rhs, ""


def _dilcher(k):
    def fn(p, ctx):
        return _D(k, 0.5, 1.0, COS, ctx), dilcher_alt_log_sum(k, ctx), ""

    return fn


for _k in (1, 2):
    _register(f"I-Dilcher-{_k}", f"sum (-1)^n log^{_k} n / n via Stieltjes constants",
              "Dilcher's formula", {}, 1e-10, {})(_dilcher(_k))


# --- Ramanujan summation and exponential generating functions -------------------------------

_X9_PART = tuple({"x": round(0.1 * k, 10), "part": float(pt)} for k in range(1, 10) for pt in (0, 1))


@_register("I-9.4", "Regularized sum of e^{2 pi i n x}", "(9.4)",
           {"x": (0.0, 1.0), "part": [0.0, 1.0]}, 1e-9, {"x": 0.3, "part": 1.0}, _X9_PART)
def _i_9_4(p, ctx):
    x, part = p["x"], int(p["part"])
    q = cmath.exp(2j * PI * x)
    w = q / (1 - q)
    if part == 0:
        return _A(0, x, COS, ctx), _c(w.real), ""
    return _A(0, x, SIN, ctx), _c(w.imag), ""


@_register("I-9.9", "Regularized log n cosine series via digamma", "(9.9)", UNIT, 1e-8,
           {"x": 0.3}, X9)
def _i_9_9(p, ctx):
    x = p["x"]
    rhs = _lin([(0.25, digamma(x, ctx)), (0.25, digamma(1 - x, ctx))], 0.5 * L_CONST)
    return _A(1, x, COS, ctx), rhs, ""


def _log_sine_series(x, ctx):
    th = 2 * PI * x
    return odd_zeta_prime_series(th, ctx) + (-(EULER_GAMMA + math.log(th)) / th)


_X7 = tuple({"x": round(0.1 * k, 10)} for k in range(1, 8))


@_register("I-9.12", "Regularized log n sine series as a zeta'(-2n-1) power series",
           "(9.12)/(9.29)", {"x": (0.0, 0.75)}, 1e-8, {"x": 0.3}, _X7, aliases=("I-9.29",))
def _i_9_12(p, ctx):
    x = p["x"]
    return _A(1, x, SIN, ctx), _log_sine_series(x, ctx), ""


@_register("I-9.15", "gamma_1(1-x) - gamma_1(1+x) as a zeta'(-2n-1) power series", "(9.15)",
           {"x": (0.0, 0.5)}, 1e-9, {"x": 0.25},
           tuple({"x": v} for v in (0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45)))
def _i_9_15(p, ctx):
    x = p["x"]
    lhs = gamma1_reflection_series(x, ctx)
    rhs = _st(1, 1 - x, ctx) - _st(1, 1 + x, ctx)
    return lhs, rhs, ""


@_register("I-9.16", "zeta'(-2n-1) power series at pi", "(9.16)", {}, 1e-9, {})
def _i_9_16(p, ctx):
    return odd_zeta_prime_series(PI, ctx), _c((EULER_GAMMA + math.log(PI)) / PI), ""


@_register("I-9.18", "gamma_1'(1) through zeta'(-1)", "(9.18)", {}, 1e-10, {})
def _i_9_18(p, ctx):
    rhs = _lin([(2 * PI**2, zeta_prime_minus1(ctx))], ZETA2 * L_CONST)
    return gamma1_prime(1.0, ctx), rhs, ""


def _g1_fd(x, ctx):
    # five-point derivative of the direct series at x + 1, where gamma_1 is smooth,
    # moved back with gamma_1(x) = gamma_1(x + 1) + log(x)/x
    h = 1e-3
    v = [_st(1, x + 1 + m * h, ctx) for m in (-2, -1, 1, 2)]
    d1 = (v[0].value - 8 * v[1].value + 8 * v[2].value - v[3].value) / (12 * h)
    noise = 18 * max(q.err_estimate for q in v) / (12 * h)
    # h^4 gamma_1^(5) / 30 with |gamma_1^(5)| < 5!/x^6 (1 + log) on [1, 2]
    trunc = h**4 * 120 * (1 + math.log(x + 1)) * 4 / 30
    return RealValue(d1 + (1 - math.log(x)) / x**2, noise + trunc + 4 * EPS * abs(d1))


@_register("I-9.20", "gamma_1'(x) = zeta(2, x) + zeta'(2, x)", "(9.20)/(9.21)", UNIT, 1e-8,
           {"x": 0.3}, X9, aliases=("I-9.21",))
def _i_9_20(p, ctx):
    x = p["x"]
    return _g1_fd(x, ctx), gamma1_prime(x, ctx), ""


def _alt_exp_direct(z, k=0, inv=False):
    # sum (-1)^n n^k e^{-nz} log n (or with an extra 1/n), summed directly
    N = _cutoff(z, -k, 1)
    n = np.arange(1, N + 1, dtype=np.float64)
    w = np.log(n) * np.exp(-z * n) * n**k
    if inv:
        w = w / n
    w[0::2] *= -1.0
    return RealValue(csum(w), 4 * EPS * float(np.sum(np.abs(w))) + math.exp(-z * N) * N**k)


_Z = (0.25, 0.5, 1.0, 1.5, 2.0)


@_register("I-9.23", "Alternating e^{-nz} log n series in closed form", "(9.23)",
           {"z": (0.0, PI)}, 1e-10, {"z": 0.5}, tuple({"z": z} for z in _Z))
def _i_9_23(p, ctx):
    z = p["z"]
    return _alt_exp_direct(z), alt_exp_log_closed(z, ctx), ""


@_register("I-9.24", "Abel limit of sum (-1)^n log n", "(9.24)", {}, 1e-8, {})
def _i_9_24(p, ctx):
    lhs = abel_exp_limit(0, ctx).as_real()
    zp0 = _hz(1, 0.0, 1.0, ctx)
    rhs = -zp0 - LOG2
    printed = zp0.value - LOG2
    return lhs, rhs, _note_printed("(zeta'(0) - log 2)", lhs, printed)


@_register("I-9.26", "Abel limit of sum (-1)^n n log n", "(9.26)", {}, 1e-8, {})
def _i_9_26(p, ctx):
    lhs = abel_exp_limit(1, ctx).as_real()
    rhs = _lin([(-3.0, zeta_prime_minus1(ctx))], -LOG2 / 3)
    return lhs, rhs, ""


@_register("I-9.27", "Euler's alternating zeta(3) from sum (-1)^n n^2 log n", "(9.27)", {},
           1e-8, {})
def _i_9_27(p, ctx):
    lim = abel_exp_limit(2, ctx).as_real()
    return alt_zeta_deriv(0, 3.0, ctx), lim.scale(3 * PI**2 / 7), ""


@_register("I-9.28", "Integrated alternating e^{-nz} log n series", "(9.28)",
           {"z": (0.0, PI)}, 1e-10, {"z": 0.5}, tuple({"z": z} for z in _Z))
def _i_9_28(p, ctx):
    z = p["z"]
    lhs = _alt_exp_direct(z, inv=True) - dilcher_alt_log_sum(1, ctx)
    closed = alt_exp_log_integrated(z, ctx)
    # integrating the series from 0 to z gives minus the left-hand side
    return lhs, -closed, _note_printed("(without the minus sign)", lhs, closed.value)


@_register("I-9.30", "Regularized log n cosine series as a zeta'(-2n) power series", "(9.30)",
           {"x": (0.0, 0.75)}, 1e-8, {"x": 0.3}, _X7)
def _i_9_30(p, ctx):
    x = p["x"]
    rhs = -even_zeta_prime_series(2 * PI * x, ctx) + (-0.25 / x)
    return _A(1, x, COS, ctx), rhs, ""


@_register("I-zeta-odd", "sum zeta(2n+1) x^(2n) through digamma", "zeta odd power series",
           {"x": (-0.95, 0.95)}, 1e-10, {"x": 0.3},
           tuple({"x": v} for v in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9)))
def _i_zeta_odd(p, ctx):
    r = zeta_odd_power_series(p["x"], ctx)
    return r.as_real(), RealValue(r.closed_form, r.closed_err), ""


# --- public API ----------------------------------------------------------------------------


def list_identities():
    """All descriptors in catalog order."""
    return [e.descriptor for e in _CATALOG.values()]


def _entry(id_):
    key = _ALIASES.get(id_, id_)
    try:
        return _CATALOG[key]
    except KeyError:
        raise UnknownIdentityError(id_) from None


def lookup(id_):
    return _entry(id_).descriptor


def sample_points(id_, plan=SamplePlan.FULL):
    e = _entry(id_)
    return [dict(e.smoke)] if plan is SamplePlan.SMOKE else [dict(g) for g in e.grid]


def check(id_, params=None, ctx=None):
    """Evaluate both sides of identity id_ at params and return the case record."""
    ctx = resolve(ctx)
    e = _entry(id_)
    params = {k: float(v) for k, v in (params if params is not None else e.smoke).items()}
    _check_domain(e, params)
    t0 = time.perf_counter()
    lhs, rhs, note = e.evaluate(params, ctx)
    elapsed = time.perf_counter() - t0
    residual = abs(lhs.value - rhs.value)
    tol = max(e.descriptor.default_tolerance, 4 * (lhs.err_estimate + rhs.err_estimate))
    return IdentityCase(e.descriptor.id, params, float(lhs.value), float(rhs.value), residual, tol,
                        bool(residual <= tol), elapsed, float(lhs.err_estimate),
                        float(rhs.err_estimate), note)


def run_suite(filter=None, sample_plan=SamplePlan.SMOKE, ctx=None):
    """Run every identity whose id starts with filter, in catalog order.

    Errors raised by a case (non-convergence, domain problems) are recorded
    as failing cases with the message in the note; the suite keeps going.
    """
    ctx = resolve(ctx)
    plan = SamplePlan(sample_plan)
    out = []
    for id_, e in _CATALOG.items():
        if filter and not id_.startswith(filter):
            continue
        for params in sample_points(id_, plan):
            try:
                out.append(check(id_, params, ctx))
            except (ConvergenceError, DomainError, ArithmeticError, ValueError) as exc:
                out.append(IdentityCase(id_, dict(params), math.nan, math.nan, math.nan,
                                        e.descriptor.default_tolerance, False, 0.0, math.nan,
                                        math.nan, f"error: {type(exc).__name__}: {exc}"))
    return out
