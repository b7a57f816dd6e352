"""Command-line front end: eval | verify | table | constants.

Exit codes: 0 success, 1 failing identity cases, 2 bad arguments or domain
errors, 3 numerical non-convergence, 4 I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .context import ConvergenceError, DomainError, EvalContext, UnknownIdentityError
from .regsum import TrigKind, TrigSeriesSpec, abel_trig_limit
from .registry import SamplePlan, _g1_quarter_closed, run_suite
from .representations import (
    L_CONST,
    RepresentationPath,
    barnes_fourier,
    digamma_fourier,
    gamma1_rep,
    kummer_log_gamma,
    odd_zeta_prime_series,
    zeta2_fourier,
)
from .special import EULER_GAMMA, LOG_2PI, digamma, log_gamma
from .zeta import (
    alt_zeta_deriv,
    barnes_log_g,
    dirichlet_beta_deriv,
    gamma1_prime,
    hurwitz_zeta_deriv,
    riemann_zeta_deriv,
    stieltjes,
    zeta_prime_minus1,
)

EXIT_OK, EXIT_FAIL, EXIT_ARGS, EXIT_CONVERGENCE, EXIT_IO = 0, 1, 2, 3, 4


class _ArgError(Exception):
    pass


def fmt(v):
    """17 significant digits, enough to round-trip any binary64."""
    if v is None or (isinstance(v, float) and not math.isfinite(v)):
        return "nan" if v is not None else ""
    return format(float(v), ".17g")


# --- quantities ------------------------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _ArgError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))
    return [getattr(args, n) for n in names]


def _kind(args):
    return TrigKind(args.kind) if args.kind else TrigKind.COS


def _q_stieltjes(a, ctx):
    n, x = _need(a, "n", "x")
    r = stieltjes(int(n), x, ctx)
    return r.value, r.err_estimate, r.method.value


def _q_hurwitz(a, ctx):
    k, s, x = _need(a, "k", "s", "x")
    r = hurwitz_zeta_deriv(int(k), s, x, ctx)
    return r.value, r.err_estimate, "euler_maclaurin"


def _q_riemann(a, ctx):
    k, s = _need(a, "k", "s")
    r = riemann_zeta_deriv(int(k), s, ctx)
    return r.value, r.err_estimate, "euler_maclaurin"


def _q_beta(a, ctx):
    (s,) = _need(a, "s")
    r = dirichlet_beta_deriv(int(a.k or 0), s, ctx)
    return r.value, r.err_estimate, "hurwitz_quarter"


def _q_alt_zeta(a, ctx):
    (s,) = _need(a, "s")
    r = alt_zeta_deriv(int(a.k or 0), s, ctx)
    return r.value, r.err_estimate, "euler_maclaurin"


def _q_barnes(a, ctx):
    (x,) = _need(a, "x")
    r = barnes_log_g(x, ctx)
    return r.value, r.err_estimate, "vardi"


def _q_barnes_fourier(a, ctx):
    (x,) = _need(a, "x")
    r = barnes_fourier(x, ctx)
    return r.value, r.err_estimate, r.path.value


def _q_gamma1_rep(a, ctx):
    (x,) = _need(a, "x")
    path = RepresentationPath(a.path) if a.path else RepresentationPath.ABEL
    r = gamma1_rep(x, ctx, path)
    return r.value, r.err_estimate, r.path.value


def _q_zeta2_fourier(a, ctx):
    (x,) = _need(a, "x")
    r = zeta2_fourier(x, ctx)
    return r.value, r.err_estimate, r.path.value


def _q_abel(a, ctx):
    j, x = _need(a, "j", "x")
    spec = TrigSeriesSpec(int(j), x, y=a.y or 0.0, s=a.s or 0.0, kind=_kind(a))
    r = abel_trig_limit(spec, ctx)
    return r.value, r.err_estimate, "abel"


def _q_digamma(a, ctx):
    (x,) = _need(a, "x")
    r = digamma(x, ctx)
    return r.value, r.err_estimate, "stirling"


def _q_digamma_fourier(a, ctx):
    (x,) = _need(a, "x")
    r = digamma_fourier(x, ctx)
    return r.value, r.err_estimate, r.path.value


def _q_log_gamma(a, ctx):
    (x,) = _need(a, "x")
    r = log_gamma(x, ctx)
    return r.value, r.err_estimate, "stirling"


def _q_kummer(a, ctx):
    (x,) = _need(a, "x")
    r = kummer_log_gamma(x, ctx)
    return r.value, r.err_estimate, r.path.value


def _q_gamma1_prime(a, ctx):
    (x,) = _need(a, "x")
    r = gamma1_prime(x, ctx)
    return r.value, r.err_estimate, "hurwitz"


QUANTITIES = {
    "stieltjes": _q_stieltjes,
    "hurwitz_zeta_deriv": _q_hurwitz,
    "riemann_zeta_deriv": _q_riemann,
    "beta": _q_beta,
    "alt_zeta": _q_alt_zeta,
    "barnes_log_g": _q_barnes,
    "barnes_fourier": _q_barnes_fourier,
    "gamma1_rep": _q_gamma1_rep,
    "gamma1_prime": _q_gamma1_prime,
    "zeta2_fourier": _q_zeta2_fourier,
    "abel_trig_limit": _q_abel,
    "digamma": _q_digamma,
    "digamma_fourier": _q_digamma_fourier,
    "log_gamma": _q_log_gamma,
    "kummer_log_gamma": _q_kummer,
}


# --- constants -----------------------------------------------------------------------------


def constants_table(ctx):
    """Rows (name, closed form, closed value, engine value, residual)."""
    log2, logpi = math.log(2), math.log(math.pi)
    zp1 = zeta_prime_minus1(ctx).value
    g1 = stieltjes(1, 1.0, ctx).value
    lg14 = log_gamma(0.25, ctx).value
    rows = [
        ("logG(1/2)", "log(2)/24 - log(pi)/4 + 3 zeta'(-1)/2",
         log2 / 24 - logpi / 4 + 1.5 * zp1, barnes_log_g(0.5, ctx).value),
        ("gamma1(1/2)", "gamma1 - log^2 2 - 2 gamma log 2",
         g1 - log2**2 - 2 * EULER_GAMMA * log2, stieltjes(1, 0.5, ctx).value),
        ("gamma1", "zeta''(0) + L log(2 pi) - (L^2 - zeta(2)/2)/2",
         hurwitz_zeta_deriv(2, 0.0, 1.0, ctx).value + L_CONST * LOG_2PI
         - 0.5 * (L_CONST**2 - math.pi**2 / 12), g1),
        ("gamma1(1/4)", "gamma1 - (7 log^2 2 + 6 gamma log 2)/2 + 2 pi log Gamma(1/4) "
         "- pi (gamma + 4 log 2 + 3 log pi)/2",
         _g1_quarter_closed(ctx).value, stieltjes(1, 0.25, ctx).value),
        ("beta'(0)", "2 log Gamma(1/4) - log pi - 3 log(2)/2",
         2 * lg14 - logpi - 1.5 * log2, dirichlet_beta_deriv(1, 0.0, ctx).value),
        ("beta'(1)", "pi (gamma + 2 log 2 + 3 log pi - 4 log Gamma(1/4))/4",
         0.25 * math.pi * (EULER_GAMMA + 2 * log2 + 3 * logpi - 4 * lg14),
         dirichlet_beta_deriv(1, 1.0, ctx).value),
        ("zeta''(0,1/2)", "-log(2 pi) log 2 - log^2(2)/2",
         -LOG_2PI * log2 - 0.5 * log2**2, hurwitz_zeta_deriv(2, 0.0, 0.5, ctx).value),
        ("sum log n cos(2n pi/3)/n", "(gamma - log(3)/2) log(3)/2",
         0.5 * (EULER_GAMMA - 0.5 * math.log(3)) * math.log(3),
         abel_trig_limit(TrigSeriesSpec(1, 1 / 3, s=1.0, kind=TrigKind.COS), ctx).value),
        ("odd zeta'(-2n-1) series at pi", "(gamma + log pi)/pi",
         (EULER_GAMMA + logpi) / math.pi, odd_zeta_prime_series(math.pi, ctx).value),
        ("gamma1'(1)", "2 pi^2 zeta'(-1) + zeta(2) L",
         2 * math.pi**2 * zp1 + math.pi**2 / 6 * L_CONST, gamma1_prime(1.0, ctx).value),
    ]
    return [(n, e, c, v, abs(c - v)) for n, e, c, v in rows]


# --- reports -------------------------------------------------------------------------------


def _json_value(v):
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, float):
        return fmt(v) if math.isfinite(v) else "null"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def build_report(cases, ctx):
    finite = [c.residual for c in cases if math.isfinite(c.residual)]
    passed = sum(1 for c in cases if c.passed)
    return {
        "tool_version": __version__,
        "context": ctx.as_dict(),
        "cases": [c.as_dict() for c in cases],
        "summary": {
            "total": len(cases),
            "passed": passed,
            "failed": len(cases) - passed,
            "max_residual": max(finite) if finite else 0.0,
        },
    }


def report_json(report):
    return _json_value(report) + "\n"


def _param_str(params):
    return ";".join(f"{k}={fmt(v)}" for k, v in params.items())


def report_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "param", "lhs", "rhs", "residual", "tol", "pass"])
    for c in report["cases"]:
        w.writerow([c["id"], _param_str(c["params"]), fmt(c["lhs"]), fmt(c["rhs"]),
                    fmt(c["residual"]), fmt(c["tol"]), "true" if c["pass"] else "false"])
    return buf.getvalue()


# --- commands ------------------------------------------------------------------------------


def _context(a):
    kw = {}
    for name in ("abs_tol", "max_terms", "em_order", "abel_eps0", "abel_levels"):
        v = getattr(a, name)
        if v is not None:
            kw[name] = v
    return EvalContext(**kw)


def cmd_eval(a, ctx, out):
    fn = QUANTITIES[a.quantity]
    value, err, method = fn(a, ctx)
    out.write(f"value {fmt(value)}\nerr_estimate {fmt(err)}\nmethod {method}\n")
    return EXIT_OK


def _grid(spec):
    try:
        start, stop, count = spec.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise _ArgError(f"grid must be start:stop:count, got {spec!r}") from None
    if count < 1:
        raise _ArgError("grid count must be positive")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [round(start + i * step, 12) for i in range(count)]


def cmd_table(a, ctx, out):
    fn = QUANTITIES[a.quantity]
    xs = _grid(a.grid)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "value", "err"])
    for x in xs:
        a.x = x
        value, err, _ = fn(a, ctx)
        w.writerow([fmt(x), fmt(value), fmt(err)])
    _emit(buf.getvalue(), a.out, out)
    return EXIT_OK


def cmd_verify(a, ctx, out):
    cases = run_suite(a.filter, SamplePlan(a.plan), ctx)
    report = build_report(cases, ctx)
    text = report_json(report) if a.format == "json" else report_csv(report)
    if a.out:
        _emit(text, a.out, out)
        s = report["summary"]
        out.write(f"total {s['total']} passed {s['passed']} failed {s['failed']} "
                  f"max_residual {fmt(s['max_residual'])}\n")
        for c in cases:
            if not c.passed:
                out.write(f"FAIL {c.id} {_param_str(c.params)} residual {fmt(c.residual)} "
                          f"tol {fmt(c.tol)} {c.note}\n")
    else:
        out.write(text)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAIL


def cmd_constants(a, ctx, out):
    out.write(f"{'name':<32} {'value':>24} {'residual':>12}  closed form\n")
    for name, expr, closed, _, res in constants_table(ctx):
        out.write(f"{name:<32} {fmt(closed):>24} {res:12.3e}  {expr}\n")
    return EXIT_OK


def _emit(text, path, out):
    if path is None or path == "-":
        out.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def build_parser():
    p = argparse.ArgumentParser(prog="zetareg", description="Regularized Dirichlet series, "
                                "Stieltjes constants and the identity checker.")
    p.add_argument("--version", action="version", version=f"zetareg {__version__}")
    g = p.add_argument_group("evaluation context")
    g.add_argument("--abs-tol", type=float)
    g.add_argument("--max-terms", type=int)
    g.add_argument("--em-order", type=int)
    g.add_argument("--abel-eps0", type=float)
    g.add_argument("--abel-levels", type=int)
    sub = p.add_subparsers(dest="command", required=True)

    def quantity_args(sp):
        sp.add_argument("quantity", choices=sorted(QUANTITIES))
        for name in ("n", "k", "j"):
            sp.add_argument(f"--{name}", type=int)
        for name in ("x", "s", "y"):
            sp.add_argument(f"--{name}", type=float)
        sp.add_argument("--kind", choices=[k.value for k in TrigKind])
        sp.add_argument("--path", choices=[RepresentationPath.ABEL.value,
                                           RepresentationPath.STIELTJES_EXPANSION.value])

    e = sub.add_parser("eval", help="evaluate one quantity")
    quantity_args(e)
    t = sub.add_parser("table", help="CSV table of a quantity over a grid in x")
    quantity_args(t)
    t.add_argument("--grid", required=True, help="start:stop:count")
    t.add_argument("--out")
    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--filter")
    v.add_argument("--plan", choices=[m.value for m in SamplePlan], default="smoke")
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("--out")
    sub.add_parser("constants", help="closed-form constants against the engine")
    return p


_COMMANDS = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify, "constants": cmd_constants}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = _context(a)
        return _COMMANDS[a.command](a, ctx, out)
    except (_ArgError, DomainError, UnknownIdentityError) as exc:
        sys.stderr.write(f"zetareg: {exc}\n")
        return EXIT_ARGS
    except ConvergenceError as exc:
        sys.stderr.write(f"zetareg: no convergence: {exc}\n")
        return EXIT_CONVERGENCE
    except OSError as exc:
        sys.stderr.write(f"zetareg: {exc}\n")
        return EXIT_IO
