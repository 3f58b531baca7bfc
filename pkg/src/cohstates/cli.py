"""Command-line front end.

Subcommands:

* ``verify-algebra``  exact operator-identity suite (JSON report)
* ``cs-eval``         coherent-state profile on a grid (CSV)
* ``closed-form-check`` series vs closed-form comparison (summary + JSON)
* ``autocorr``        survival-probability trace (CSV)
* ``revivals``        revival classification of a trace (JSON)
* ``factor``          truncated-Gauss-sum divisor scan (JSON)

Output is deterministic: CSV uses '.' decimals, ',' separators, LF line
endings and 17 significant digits; JSON is emitted with sorted keys.  Files
are written via write-then-rename so a failed run never leaves partial
output.  Exit status is 0 on success, 1 when a verification fails, 2 on
parameter or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from fractions import Fraction

import numpy as np

from . import cstates, dynamics, gaussfactor, ladder

__all__ = ["main"]


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _emit(text: str, path: str | None) -> None:
    """Print to stdout, or atomically replace the target file."""
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cohstates-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header: list[str], rows: list[tuple]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _grid(lo: float, hi: float, samples: int) -> np.ndarray:
    if samples < 2:
        raise ValueError(f"sample count must be >= 2, got {samples}")
    if not lo < hi:
        raise ValueError(f"grid bounds must be strictly increasing, got [{lo!r}, {hi!r}]")
    return np.linspace(lo, hi, samples)


def _cmd_verify_algebra(args) -> int:
    report = ladder.algebra_report(
        args.lam, args.b, args.c, args.max_degree, _tamper=args.tamper
    )
    _emit(_json_text(report), args.output)
    if args.output is not None:
        status = "all identities hold" if report["all_passed"] else "FAILED"
        print(f"verify-algebra: {status} (degrees 0..{args.max_degree})")
    if not report["all_passed"]:
        failed = [e["identity"] for e in report["identities"] if not e["passed"]]
        print(f"failed identities: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def _build_state(args) -> cstates.CSExpansion:
    if args.family == "laguerre":
        return cstates.build_laguerre_cs(
            args.lam, args.alpha, tail_tol=args.tail_tol, order=args.n_terms
        )
    return cstates.build_pt_cs(
        args.rho, args.q, tail_tol=args.tail_tol, order=args.n_terms
    )


def _cmd_cs_eval(args) -> int:
    state = _build_state(args)
    if args.family == "laguerre":
        lo = 0.0 if args.grid_min is None else args.grid_min
        hi = 20.0 if args.grid_max is None else args.grid_max
        if lo < 0.0:
            raise ValueError(f"Laguerre-class grid needs x >= 0, got {lo!r}")
        xs = _grid(lo, hi, args.samples)
        header = ["x", "re", "im", "abs2"]
        values = [cstates.eval_laguerre_cs(state, float(x)) for x in xs]
    else:
        lo = 0.0 if args.grid_min is None else args.grid_min
        hi = math.pi if args.grid_max is None else args.grid_max
        xs = _grid(lo, hi, args.samples)
        header = ["theta", "re", "im", "abs2"]
        values = [cstates.eval_pt_cs(state, math.cos(float(t))) for t in xs]
    rows = [
        (float(x), v.real, v.imag, abs(v) ** 2) for x, v in zip(xs, values)
    ]
    _emit(_csv_text(header, rows), args.output)
    if args.output is not None:
        print(f"cs-eval: wrote {len(rows)} rows (truncation order {state.order})")
    return 0


def _cmd_closed_form_check(args) -> int:
    if args.family == "laguerre":
        if not args.alpha > 0.0:
            raise ValueError(f"closed form requires alpha > 0, got {args.alpha!r}")
        lo = 0.1 if args.grid_min is None else args.grid_min
        hi = 10.0 if args.grid_max is None else args.grid_max
        n_terms = 80 if args.n_terms is None else args.n_terms
        xs = _grid(lo, hi, args.samples)
        if lo <= 0.0:
            raise ValueError(f"closed form requires x > 0, got {lo!r}")
        points = []
        for x in xs:
            series = cstates.laguerre_series_sum(args.lam, args.alpha, float(x), n_terms)
            closed = cstates.eval_laguerre_cs_closed(args.lam, args.alpha, float(x))
            points.append((float(x), series.real, closed))
        params = {"lambda": args.lam, "alpha": args.alpha}
        var = "x"
    else:
        if not args.q > 0.0:
            raise ValueError(f"closed form requires q > 0, got {args.q!r}")
        lo = 0.3 if args.grid_min is None else args.grid_min
        hi = 2.5 if args.grid_max is None else args.grid_max
        n_terms = 200 if args.n_terms is None else args.n_terms
        if not (0.0 < lo and hi < math.pi):
            raise ValueError(f"theta grid must lie strictly inside (0, pi), got [{lo!r}, {hi!r}]")
        xs = _grid(lo, hi, args.samples)
        points = []
        for theta in xs:
            series = cstates.pt_series_sum(args.rho, args.q, math.cos(float(theta)), n_terms)
            closed = cstates.eval_pt_cs_closed(args.rho, args.q, float(theta))
            points.append((float(theta), series.real, closed))
        params = {"rho": args.rho, "q": args.q}
        var = "theta"

    rows = []
    max_rel = 0.0
    for x, series, closed in points:
        rel = abs(series - closed) / abs(closed)
        max_rel = max(max_rel, rel)
        rows.append({var: x, "series": series, "closed": closed, "rel_err": rel})
    report = {
        "family": args.family,
        "params": params,
        "n_terms": n_terms,
        "max_rel_err": max_rel,
        "points": rows,
    }
    if args.output is not None:
        _emit(_json_text(report), args.output)
    print(f"closed-form-check: max relative error = {_fmt(max_rel)} over {len(rows)} points")
    if args.tol is not None and max_rel > args.tol:
        print(f"exceeds tolerance {args.tol!r}", file=sys.stderr)
        return 1
    return 0


def _cmd_autocorr(args) -> int:
    state = cstates.build_pt_cs(args.rho, args.q, tail_tol=args.tail_tol)
    p = cstates.weights(state)
    if args.spec_a is not None:
        spectrum = dynamics.Spectrum(args.spec_a, args.spec_b, args.spec_c)
    else:
        spectrum = dynamics.pt_spectrum(args.rho)
    if args.t_max is not None:
        t_max = args.t_max
    else:
        t_max = args.revs * dynamics.revival_time(spectrum).t_rev
    if not t_max > args.t_min:
        raise ValueError(f"need t_min < t_max, got [{args.t_min!r}, {t_max!r}]")
    times = _grid(args.t_min, t_max, args.samples)
    trace = dynamics.autocorr(p, spectrum, times)
    rows = [
        (float(t), v.real, v.imag, float(m))
        for t, v, m in zip(trace.times, trace.values, trace.magsq)
    ]
    _emit(_csv_text(["t", "re", "im", "abs2"], rows), args.output)
    if args.output is not None:
        print(f"autocorr: wrote {len(rows)} rows, t in [0, {_fmt(t_max)}]")
    return 0


def _load_trace(path: str) -> dynamics.AutocorrTrace:
    try:
        with open(path, newline="") as handle:
            lines = [line.strip() for line in handle if line.strip()]
    except OSError as exc:
        raise ValueError(f"cannot read trace file: {exc}") from exc
    if not lines or lines[0].split(",") != ["t", "re", "im", "abs2"]:
        raise ValueError(f"malformed trace file {path!r}: expected header t,re,im,abs2")
    times, values, magsq = [], [], []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 4:
            raise ValueError(f"malformed trace file {path!r}: line {lineno} has {len(parts)} fields")
        try:
            t, re, im, m2 = (float(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"malformed trace file {path!r}: line {lineno}: {exc}") from exc
        v = complex(re, im)
        if abs(abs(v) ** 2 - m2) > 1e-12:
            raise ValueError(
                f"malformed trace file {path!r}: line {lineno}: abs2 inconsistent with re/im"
            )
        times.append(t)
        values.append(v)
        magsq.append(m2)
    if len(times) >= 2 and not all(a < b for a, b in zip(times, times[1:])):
        raise ValueError(f"malformed trace file {path!r}: times must be strictly increasing")
    return dynamics.AutocorrTrace(
        times=np.array(times), values=np.array(values), magsq=np.array(magsq)
    )


def _cmd_revivals(args) -> int:
    trace = _load_trace(args.trace)
    report = dynamics.detect_revivals(
        trace,
        args.t_rev,
        full_threshold=args.full_threshold,
        frac_threshold=args.frac_threshold,
        q_max=args.q_max,
    )
    _emit(_json_text(report.to_dict()), args.output)
    if args.output is not None:
        print(
            f"revivals: {len(report.full_revivals)} full, "
            f"{len(report.fractional_revivals)} fractional"
        )
    return 0


def _cmd_factor(args) -> int:
    report = gaussfactor.factor_scan(args.n, m_terms=args.m_terms, threshold=args.threshold)
    _emit(_json_text(report.to_dict()), args.output)
    if args.output is not None:
        factors = report.factors
        print(f"factor: n={args.n} -> {factors if factors else 'no factors found'}")
    return 0


def _add_output(parser) -> None:
    parser.add_argument("-o", "--output", default=None, help="output path (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohstates",
        description="Coherent-state toolkit: exact ladder algebra, closed-form checks, "
        "revival dynamics and Gauss-sum divisor scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-algebra", help="run the exact operator-identity suite")
    p.add_argument("--max-degree", type=int, required=True, help="highest monomial degree tested (>= 1)")
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(3, 2),
                   help="Laguerre-class parameter (rational, e.g. 3/2)")
    p.add_argument("--b", type=_rational, default=Fraction(4), help="hypergeometric parameter b")
    p.add_argument("--c", type=_rational, default=Fraction(5, 2), help="hypergeometric parameter c")
    p.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)
    _add_output(p)
    p.set_defaults(handler=_cmd_verify_algebra)

    for name, handler in (("cs-eval", _cmd_cs_eval), ("closed-form-check", _cmd_closed_form_check)):
        p = sub.add_parser(
            name,
            help="evaluate a state on a grid" if name == "cs-eval" else "compare series against the closed form",
        )
        p.add_argument("--family", choices=["laguerre", "pt"], required=True)
        p.add_argument("--lam", type=float, default=2.0, help="Laguerre index (> -1)")
        p.add_argument("--alpha", type=float, default=3.0, help="Laguerre-class eigenvalue")
        p.add_argument("--rho", type=float, default=2.0, help="Poschl-Teller index (> 0)")
        p.add_argument("--q", type=float, default=5.0, help="Poschl-Teller-class eigenvalue")
        p.add_argument("--grid-min", type=float, default=None)
        p.add_argument("--grid-max", type=float, default=None)
        p.add_argument("--samples", type=int, default=400)
        p.add_argument("--n-terms", type=int, default=None, help="explicit truncation order")
        p.add_argument("--tail-tol", type=float, default=1e-12)
        if name == "closed-form-check":
            p.add_argument("--tol", type=float, default=None,
                           help="exit 1 when the max relative error exceeds this")
        _add_output(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("autocorr", help="emit a survival-probability trace")
    p.add_argument("--rho", type=float, default=2.0)
    p.add_argument("--q", type=float, default=5.0)
    p.add_argument("--samples", type=int, default=4097)
    p.add_argument("--revs", type=float, default=2.0, help="trace length in revival periods")
    p.add_argument("--t-min", type=float, default=0.0, help="trace start (negative allowed for symmetric grids)")
    p.add_argument("--t-max", type=float, default=None, help="trace end in time units (overrides --revs)")
    p.add_argument("--tail-tol", type=float, default=1e-12)
    p.add_argument("--spec-a", type=float, default=None, help="override spectrum: quadratic coefficient")
    p.add_argument("--spec-b", type=float, default=0.0)
    p.add_argument("--spec-c", type=float, default=0.0)
    _add_output(p)
    p.set_defaults(handler=_cmd_autocorr)

    p = sub.add_parser("revivals", help="classify revivals in a trace CSV")
    p.add_argument("--trace", required=True, help="CSV produced by the autocorr command")
    p.add_argument("--t-rev", type=float, required=True, help="revival period 2 pi / a")
    p.add_argument("--full-threshold", type=float, default=0.9)
    p.add_argument("--frac-threshold", type=float, default=0.2)
    p.add_argument("--q-max", type=int, default=8)
    _add_output(p)
    p.set_defaults(handler=_cmd_revivals)

    p = sub.add_parser("factor", help="truncated-Gauss-sum divisor scan")
    p.add_argument("--n", type=int, required=True, help="integer to scan (>= 2)")
    p.add_argument("--m-terms", type=int, default=None, help="truncation length (default ceil(sqrt(n)))")
    p.add_argument("--threshold", type=float, default=gaussfactor.DEFAULT_THRESHOLD)
    _add_output(p)
    p.set_defaults(handler=_cmd_factor)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
