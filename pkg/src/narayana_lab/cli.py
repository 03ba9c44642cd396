"""Command-line front end.

    narayana-lab seq a --n 7 --route quad
    narayana-lab seq a_mu --mu 1/2 --n 5 --route closed
    narayana-lab poly gen_narayana --mu 2 --n 4
    narayana-lab zeta --mu 1 --n 3
    narayana-lab verify all
    narayana-lab arith valuation --p 2 --n 200
    narayana-lab export a --n 7 --format csv --out a.csv

Exit codes: 0 success, 1 a hard check failed, 2 bad flags, 3 invalid mu, 4 I/O error.
Data goes to stdout (or --out); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from . import arith
from .algebra import as_rational
from .beta_moments import (
    a_half_closed,
    a_mu_closed,
    a_mu_table,
    a_neg_half_closed,
    beta_moments,
    bessel_zeta,
    moments_to_cumulants,
    verify_bernoulli_euler_identities,
)
from .errors import BadMu, NarayanaLabError
from .generating import series_identities_report
from .hessenberg import a_via_det, b_via_det
from .narayana_poly import (
    NamedPoly,
    gegen_narayana_check,
    gegenbauer,
    gen_narayana,
    lasalle_recurrence_check,
    narayana_poly,
    narayana_representations,
    s_closed_form,
    s_legendre_form,
    s_poly,
)
from .records import OutputRecord, rational_to_str, seq_values_to_csv
from .reports import Report
from .sequences import Route, SeqValue, A_table, a_table, b_table, seq_a_sym

__all__ = ["main", "build_parser", "run_suite", "SUITES"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MU, EXIT_IO = 0, 1, 2, 3, 4
THREADS_ENV = "NARAYANA_LAB_THREADS"


class UsageError(Exception):
    pass


# --- sequences -------------------------------------------------------------

SEQ_ROUTES = {
    "a": ("def", "quad", "sym", "det", "closed"),
    "A": ("def",),
    "b": ("def", "det", "closed"),
    "a_mu": ("def", "closed", "bernoulli", "euler"),
}


def compute_sequence(name: str, n_max: int, route: Optional[str] = None, mu=None, a1=None) -> List[SeqValue]:
    if name not in SEQ_ROUTES:
        raise UsageError(f"unknown sequence {name!r}")
    route = route or SEQ_ROUTES[name][0]
    if route not in SEQ_ROUTES[name]:
        raise UsageError(f"route {route!r} not available for {name}; choose from {', '.join(SEQ_ROUTES[name])}")
    if n_max < 1:
        raise UsageError("--n must be >= 1")
    if name != "a_mu" and (mu is not None or a1 is not None):
        raise UsageError("--mu and --a1 only apply to a_mu")
    r = Route(route)
    idx = range(1, n_max + 1)
    if name == "A":
        vals = A_table(n_max)
    elif name == "a":
        if route in ("def", "quad"):
            vals = a_table(n_max, r)
        elif route == "sym":
            vals = [Fraction(2)] + [seq_a_sym(n).value for n in range(2, n_max + 1)]
        elif route == "det":
            vals = [a_via_det(n).value for n in idx]
        else:
            vals = [a_mu_closed(1, n) for n in idx]
    elif name == "b":
        if route == "def":
            vals = b_table(n_max)
        elif route == "det":
            vals = [b_via_det(n).value for n in idx]
        else:
            vals = [a_mu_closed(0, n) / 2 for n in idx]
    else:
        if mu is None:
            raise UsageError("a_mu needs --mu")
        mu = as_rational(mu)
        if route == "def":
            vals = a_mu_table(mu, n_max, 2 if a1 is None else a1)
        else:
            if a1 is not None:
                raise UsageError("--a1 only applies to the recurrence route")
            if route == "closed":
                vals = [a_mu_closed(mu, n) for n in idx]
            elif route == "bernoulli":
                if mu != Fraction(1, 2):
                    raise UsageError("route bernoulli needs --mu 1/2")
                vals = [a_half_closed(n) for n in idx]
            else:
                if mu != Fraction(-1, 2):
                    raise UsageError("route euler needs --mu -1/2")
                vals = [a_neg_half_closed(n) for n in idx]
    return [SeqValue(n, v, r) for n, v in zip(idx, vals)]


def sequence_record(name, values: Sequence[SeqValue], mu=None, a1=None) -> OutputRecord:
    params = {"name": name, "route": values[0].route.value if values else "", "n": str(len(values))}
    if mu is not None:
        params["mu"] = rational_to_str(mu)
    if a1 is not None:
        params["a1"] = rational_to_str(a1)
    return OutputRecord("sequence", params, {"n": [v.index for v in values], "values": [v.value for v in values]})


# --- polynomials and zeta --------------------------------------------------

POLY_FAMILIES = ("narayana", "gen_narayana", "gegenbauer", "s")


def compute_poly(family: str, n: int, mu=None) -> NamedPoly:
    needs_mu = family in ("gen_narayana", "gegenbauer")
    if needs_mu and mu is None:
        raise UsageError(f"{family} needs --mu")
    if not needs_mu and mu is not None:
        raise UsageError(f"{family} takes no --mu")
    if family == "narayana":
        return narayana_poly(n)
    if family == "gen_narayana":
        return gen_narayana(mu, n)
    if family == "gegenbauer":
        return gegenbauer(mu, n)
    if family == "s":
        return s_poly(n)
    raise UsageError(f"unknown family {family!r}")


def zeta_record(mu, n: int, numeric: bool = False, K: int = 2000) -> OutputRecord:
    mu = as_rational(mu)
    if numeric:
        from .bessel_numeric import bessel_zeta_numeric

        vals = [bessel_zeta_numeric(mu, k, K) for k in range(1, n + 1)]
        return OutputRecord("zeta", {"mu": mu, "n": n, "K": K}, {"n": list(range(1, n + 1)), "approx_values": vals},
                            approx=True)
    table = bessel_zeta(mu, n)
    return OutputRecord("zeta", {"mu": mu, "n": n}, {"n": list(range(1, n + 1)), "values": list(table.values)})


# --- verification suites ---------------------------------------------------

def _chunks(n_max: int, size: int):
    for lo in range(1, n_max + 1, size):
        yield lo, min(n_max, lo + size - 1)


def _routes_chunk(lo: int, hi: int) -> Report:
    rep = Report(f"routes {lo}..{hi}")
    a_def = a_table(hi)
    a_quad = a_table(hi, Route.QuadraticRecurrence)
    b = b_table(hi)
    for n in range(lo, hi + 1):
        ref = a_def[n - 1]
        rep.add("a_quad", a_quad[n - 1] == ref, n=n)
        if n >= 2:
            rep.add("a_sym", seq_a_sym(n).value == ref, n=n)
        rep.add("a_det", a_via_det(n).value == ref, n=n)
        rep.add("a_closed", a_mu_closed(1, n) == ref, n=n)
        rep.add("b_det", b_via_det(n).value == b[n - 1], n=n)
        rep.add("b_closed", a_mu_closed(0, n) / 2 == b[n - 1], n=n)
    return rep


def _cumulant_route(n_max: int) -> Report:
    rep = Report("cumulant route")
    kappa = moments_to_cumulants(beta_moments(1, 2 * n_max))
    A = A_table(n_max)
    for n in range(1, n_max + 1):
        rep.add("A_from_catalan_cumulants", (-1) ** (n + 1) * kappa[2 * n] == A[n - 1], n=n)
    return rep


def _poly_reps(lo: int, hi: int) -> Report:
    rep = Report(f"Narayana representations {lo}..{hi}")
    for n in range(lo - 1, hi):
        reps = narayana_representations(n)
        ref = reps["defining_sum"].poly
        for name, p in reps.items():
            if name != "defining_sum":
                rep.add(name, p.poly == ref, n=n)
    return rep


def _gegen(mu, n_max: int) -> Report:
    rep = Report(f"Gegenbauer-Narayana mu={mu}")
    for n in range(n_max + 1):
        rep.add("gegen_narayana", gegen_narayana_check(mu, n), n=n, mu=rational_to_str(as_rational(mu)))
    return rep


def _s_poly(n_max: int) -> Report:
    rep = Report("S_n closed form")
    for n in range(1, n_max + 1):
        s = s_poly(n).poly
        rep.add("s_closed_form", s_closed_form(n).poly == s, n=n)
        rep.add("s_legendre_form", s_legendre_form(n).poly == s, n=n)
        rep.add("s_symmetry", s.reverse(n + 1) == s, n=n)
    return rep


def _zeta_numeric() -> Report:
    from .bessel_numeric import bessel_zero_numeric, bessel_zeta_numeric

    rep = Report("numeric zeta")
    j11 = bessel_zero_numeric(1, 1)
    rep.add("j_1_1", abs(j11 - 3.83170597) < 1e-8, value=j11, approx=True)
    z1 = bessel_zeta_numeric(1, 1, 200)
    rep.add("zeta_1_2_K200", abs(z1 - 0.125) < 1e-9, value=z1, approx=True)
    zh = bessel_zeta_numeric(Fraction(1, 2), 1, 10 ** 4)
    rep.add("zeta_half_2_K10000", abs(zh - 1 / 6) < 1e-6, value=zh, approx=True)
    for mu in (0, 1, 2):
        exact = bessel_zeta(mu, 3)
        for k in (1, 2, 3):
            num = bessel_zeta_numeric(mu, k, 500)
            rep.add("zeta_exact_vs_numeric", abs(num - float(exact[k])) <= 1e-9 * float(exact[k]),
                    mu=mu, n=k, value=num, approx=True)
    return rep


def _suite_tasks(suite: str, n: Optional[int]) -> List[Callable[[], Report]]:
    if suite == "routes":
        N = n or 40
        tasks = [lambda lo=lo, hi=hi: _routes_chunk(lo, hi) for lo, hi in _chunks(N, 10)]
        return tasks + [lambda: _cumulant_route(min(N, 20))]
    if suite == "identities":
        N = n or 25
        tasks = [lambda lo=lo, hi=hi: _poly_reps(lo, hi) for lo, hi in _chunks(N + 1, 7)]
        tasks += [lambda mu=mu: _gegen(mu, min(N, 20)) for mu in (0, Fraction(1, 2), 1, 2)]
        tasks += [lambda: lasalle_recurrence_check(1, N)]
        tasks += [lambda mu=mu: lasalle_recurrence_check(mu, min(N, 20)) for mu in (0, Fraction(1, 2), 2)]
        tasks += [lambda: _s_poly(max(N, 30)),
                  lambda: series_identities_report(15),
                  lambda: verify_bernoulli_euler_identities(15)]
        return tasks
    if suite == "parity":
        N = n or 512
        return [lambda: arith.parity_theorems_check(N)]
    if suite == "zeta-numeric":
        return [_zeta_numeric]
    if suite == "all":
        return [t for s in ("routes", "identities", "parity", "zeta-numeric") for t in _suite_tasks(s, None)]
    raise UsageError(f"unknown suite {suite!r}")


SUITES = ("routes", "identities", "parity", "zeta-numeric", "all")


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return min(4, os.cpu_count() or 1)
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer") from None
    if k < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer")
    return k


def run_suite(suite: str, n: Optional[int] = None, threads: Optional[int] = None) -> List[Report]:
    """Run a suite's tasks on a thread pool; reports come back in task order."""
    tasks = _suite_tasks(suite, n)
    with ThreadPoolExecutor(max_workers=threads or thread_count()) as pool:
        return list(pool.map(lambda t: t(), tasks))


# --- argument parsing ------------------------------------------------------

def _rational_arg(s: str) -> Fraction:
    try:
        return as_rational(s)
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {s!r}") from None


def _positive_int(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="narayana-lab", description="Exact computations with Narayana-type sequences.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("text", "json")):
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--out", help="write output to this file instead of stdout")

    s = sub.add_parser("seq", help="sequence values")
    s.add_argument("name", choices=sorted(SEQ_ROUTES))
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--route")
    s.add_argument("--mu", type=_rational_arg)
    s.add_argument("--a1", type=_rational_arg)
    common(s, ("text", "json", "csv"))

    s = sub.add_parser("poly", help="polynomial coefficients, constant term first")
    s.add_argument("family", choices=POLY_FAMILIES)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mu", type=_rational_arg)
    common(s)

    s = sub.add_parser("zeta", help="Bessel zeta values zeta_mu(2k), k = 1..n")
    s.add_argument("--mu", type=_rational_arg, required=True)
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--route", choices=("exact", "numeric"), default="exact")
    common(s)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--n", type=_positive_int)
    common(s)

    s = sub.add_parser("arith", help="arithmetic reports")
    s.add_argument("report", choices=("parity", "valuation", "p-integrality", "logconcavity"))
    s.add_argument("--n", type=_positive_int, default=200)
    s.add_argument("--p", type=_positive_int, default=2)
    s.add_argument("--mu", type=_rational_arg)
    s.add_argument("--a1", type=_rational_arg, action="append")
    s.add_argument("--route", choices=("a", "b"), default="a", help="sequence for logconcavity")
    common(s)

    s = sub.add_parser("export", help="write a table as JSON lines or CSV")
    s.add_argument("name", choices=sorted(SEQ_ROUTES) + ["zeta"])
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--route")
    s.add_argument("--mu", type=_rational_arg)
    s.add_argument("--a1", type=_rational_arg)
    s.add_argument("--format", choices=("json", "csv"), required=True)
    s.add_argument("--out", required=True)
    return p


# --- command handlers ------------------------------------------------------

def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _report_record(rep: Report) -> OutputRecord:
    d = rep.to_dict()
    d["failures"] = [{"name": c.name, **c.params} for c in rep.failures]
    return OutputRecord("report", {"title": rep.title}, d)


def _cmd_seq(args) -> int:
    vals = compute_sequence(args.name, args.n, args.route, args.mu, args.a1)
    if args.format == "csv":
        _emit(seq_values_to_csv(vals), args.out)
    elif args.format == "json":
        _emit(sequence_record(args.name, vals, args.mu, args.a1).to_json(), args.out)
    else:
        _emit(" ".join(rational_to_str(v.value) for v in vals), args.out)
    return EXIT_OK


def _cmd_poly(args) -> int:
    np_ = compute_poly(args.family, args.n, args.mu)
    if args.format == "json":
        params = {"family": args.family, "n": args.n}
        if args.mu is not None:
            params["mu"] = args.mu
        _emit(OutputRecord("polynomial", params, {"coeffs": list(np_.poly.coeffs)}).to_json(), args.out)
    else:
        _emit(str(np_.poly), args.out)
    return EXIT_OK


def _cmd_zeta(args) -> int:
    rec = zeta_record(args.mu, args.n, numeric=args.route == "numeric")
    if args.format == "json":
        _emit(rec.to_json(), args.out)
    elif rec.approx:
        _emit(" ".join(repr(v) for v in rec.payload["approx_values"]), args.out)
    else:
        _emit(" ".join(rational_to_str(v) for v in rec.payload["values"]), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.n)
    failures = [{"report": r.title, "name": c.name, **c.params} for r in reports for c in r.failures]
    if args.format == "json":
        _emit("\n".join(_report_record(r).to_json() for r in reports), args.out)
    else:
        lines = [r.summary() for r in reports]
        lines.append("result: " + ("pass" if not failures else "FAIL"))
        if failures:
            lines.append("failures: " + json.dumps(failures, sort_keys=True))
        _emit("\n".join(lines), args.out)
    if failures:
        print(f"{len(failures)} hard check(s) failed", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def _cmd_arith(args) -> int:
    if args.report == "parity":
        reps = [arith.parity_theorems_check(max(args.n, 8))]
    elif args.report == "valuation":
        N = max(args.n, 16)
        if args.p == 2:
            vr = arith.nu2_pattern_report(N)
        elif args.p == 3:
            vr = arith.nu3_fact_report(N)
        else:
            a = a_table(N)
            vr = arith.ValuationReport(args.p, [(n, arith.nu_p(a[n - 1], args.p)) for n in range(1, N + 1)])
            vr.report.title = f"nu_{args.p}(a_n), n <= {N}"
        if args.format == "json":
            _emit(OutputRecord("report", {"p": args.p, "n": N}, vr.to_dict()).to_json(), args.out)
        else:
            _emit(" ".join(str(v) for _, v in vr.entries) + "\n" + vr.report.summary(), args.out)
        return EXIT_OK
    elif args.report == "p-integrality":
        if args.mu is None:
            raise UsageError("p-integrality needs --mu")
        cands = args.a1 or [2]
        res = arith.p_integrality_search(args.mu, args.n, cands)
        payload = {"a1": res.a1, "p": res.p, "checked_to": res.checked_to,
                   "witness_denominators": list(res.witness_denominators)}
        if args.format == "json":
            _emit(OutputRecord("report", {"mu": args.mu, "n": args.n}, payload).to_json(), args.out)
        else:
            _emit(f"mu={rational_to_str(res.mu)} a1={rational_to_str(res.a1)} p={res.p} checked_to={res.checked_to}",
                  args.out)
        return EXIT_OK
    else:
        seq = a_table(args.n) if args.route == "a" else b_table(args.n)
        reps = [arith.logconcavity_report(seq, True, args.route), arith.logconcavity_report(seq, False, args.route)]
    if args.format == "json":
        _emit("\n".join(_report_record(r).to_json() for r in reps), args.out)
    else:
        _emit("\n".join(r.summary() for r in reps), args.out)
    return EXIT_OK if all(r.ok for r in reps) else EXIT_FAIL


def _cmd_export(args) -> int:
    if args.name == "zeta":
        if args.format == "csv":
            raise UsageError("zeta export supports --format json only")
        if args.mu is None:
            raise UsageError("zeta export needs --mu")
        _emit(zeta_record(args.mu, args.n).to_json(), args.out)
        return EXIT_OK
    vals = compute_sequence(args.name, args.n, args.route, args.mu, args.a1)
    if args.format == "csv":
        _emit(seq_values_to_csv(vals), args.out)
    else:
        lines = [sequence_record(args.name, [v], args.mu, args.a1).to_json() for v in vals]
        _emit("\n".join(lines), args.out)
    return EXIT_OK


HANDLERS = {
    "seq": _cmd_seq,
    "poly": _cmd_poly,
    "zeta": _cmd_zeta,
    "verify": _cmd_verify,
    "arith": _cmd_arith,
    "export": _cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return HANDLERS[args.command](args)
    except BadMu as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MU
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (NarayanaLabError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
