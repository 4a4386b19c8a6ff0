"""Command-line front end.

    newtonrule analyze "x^3 - 3x + 1" --methods newton,modified --json
    newtonrule sweep "x^3 - 8x^2 + 8*(3-2q)x - 16*(1-q)" --param q --from 1/100 --to 74/100 --step 1/100
    newtonrule threshold "<family>" --param q --predicate falsely-positive --lo 1/6 --hi 3/4 --width 1/10000
    newtonrule audit --count 1000 --seed 0

Exit codes: 0 success, 2 parse or usage error, 3 audit failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .classical import format_enclosure, isolate_real_roots
from .errors import ParseError, PolynomialError
from .oracle import run_audit
from .parser import GRAMMAR_HELP, parse_parametric, parse_polynomial
from .poly import format_rational, parse_rational
from .report import SCHEMA, analyze, expand_methods, render_text
from .sweep import isolate_threshold, make_predicate, parametric_quadratic_elements, sweep

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_AUDIT = 3


@dataclass
class AnalysisRequest:
    text: str
    methods: tuple = ("all",)
    interval: tuple | None = None
    output: str = "text"
    digits: int = 3
    param: str | None = None
    sweep: tuple | None = None  # (start, stop, step)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        if self.sweep is not None and self.param is None:
            raise ValueError("a sweep needs a parametric expression (--param)")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _interval(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("interval must look like q,r")
    q, r = (_rational(s.strip()) for s in parts)
    if not q < r:
        raise argparse.ArgumentTypeError("interval needs q < r")
    return q, r


def _emit(obj, as_json: bool, text: str, out):
    if as_json:
        json.dump(obj, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(text)


def _parse_error(exc: ParseError, err) -> int:
    d = exc.diagnostic
    err.write(f"parse error at position {d.position}: {d.message}\n")
    if exc.text is not None:
        err.write(f"  {exc.text}\n  {' ' * d.position}^\n")
    return EXIT_PARSE


# subcommands -------------------------------------------------------------------


def run(request: AnalysisRequest, out=None, err=None) -> int:
    """Run an analysis or sweep request, writing the report to ``out``."""
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = request.output == "json"
    try:
        if request.sweep is not None:
            pp = parse_parametric(request.text, request.param)
            rows = sweep(pp, *request.sweep)
            data = _sweep_dict(pp, rows, request)
            _emit(data, as_json, _sweep_text(data), out)
            return EXIT_OK
        p = parse_polynomial(request.text)
        rep = analyze(p, request.methods, request.interval, request.digits)
    except ParseError as exc:
        return _parse_error(exc, err)
    except (PolynomialError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    _emit(rep, as_json, render_text(rep), out)
    return EXIT_OK


def _sweep_dict(pp, rows, request) -> dict:
    start, stop, step = request.sweep
    return {
        "schema": SCHEMA,
        "family": pp.to_text(),
        "param": pp.param,
        "from": format_rational(start), "to": format_rational(stop), "step": format_rational(step),
        "rows": [{
            "value": format_rational(r.value),
            "polynomial": r.polynomial.to_text(),
            "regime": r.regime,
            "falsely_positive": list(r.falsely_positive),
            "newton": None if r.newton is None else list(r.newton),
            "modified": None if r.modified is None else list(r.modified),
            "real_roots": r.real_roots,
            "note": r.note,
        } for r in rows],
        "boundaries": [
            {"between": [format_rational(a.value), format_rational(b.value)], "from": a.regime, "to": b.regime}
            for a, b in zip(rows, rows[1:]) if a.regime != b.regime
        ],
    }


def _sweep_text(data) -> str:
    p = data["param"]
    lines = [f"family: {data['family']}",
             f"{p:>8}  {'regime':<17} {'FP':<10} {'newton':<8} {'modified':<9} real"]
    for r in data["rows"]:
        fp = ",".join(f"A{k}" for k in r["falsely_positive"]) or "-"
        nw = "-" if r["newton"] is None else "{}/{}".format(*r["newton"])
        md = "-" if r["modified"] is None else "{}/{}".format(*r["modified"])
        lines.append(f"{r['value']:>8}  {r['regime']:<17} {fp:<10} {nw:<8} {md:<9} {r['real_roots']}")
    for b in data["boundaries"]:
        lines.append(f"regime change {b['from']} -> {b['to']} for {p} in ({b['between'][0]}, {b['between'][1]}]")
    return "\n".join(lines) + "\n"


def cmd_threshold(args, out, err) -> int:
    try:
        pp = parse_parametric(args.expr, args.param)
        make_predicate(args.predicate)
        iv = isolate_threshold(pp, args.predicate, args.lo, args.hi, args.width)
    except ParseError as exc:
        return _parse_error(exc, err)
    except (PolynomialError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    digits = args.digits
    data = {
        "schema": SCHEMA,
        "family": pp.to_text(),
        "param": pp.param,
        "predicate": args.predicate,
        "lo": format_rational(iv.lo),
        "hi": format_rational(iv.hi),
        "display": format_enclosure(iv.lo, iv.hi, digits),
    }
    lines = [f"family: {data['family']}",
             f"predicate {args.predicate} changes for {pp.param} in ({data['lo']}, {data['hi']}] "
             f"{data['display']}"]
    if args.predicate.startswith("sign:A"):
        k = int(args.predicate[len("sign:A"):])
        elem = parametric_quadratic_elements(pp)[k]
        inside = [r for r in isolate_real_roots(elem, iv.width / 4) if r.lo >= iv.lo and r.hi <= iv.hi] \
            if elem.degree > 0 else []
        data["element"] = elem.to_text(pp.param)
        if elem.degree == 1:
            root = -elem.coeffs[0] / elem.coeffs[1]
            data["exact_boundary"] = format_rational(root)
            lines.append(f"A_{k}({pp.param}) = {data['element']} vanishes exactly at {pp.param} = {data['exact_boundary']}")
        elif inside:
            lines.append(f"A_{k}({pp.param}) = {data['element']} has a root in the interval")
    _emit(data, args.json, "\n".join(lines) + "\n", out)
    return EXIT_OK


def cmd_audit(args, out, err) -> int:
    summary = run_audit(args.count, args.seed, args.max_degree, args.min_degree)
    counts = summary.counts()
    failures = summary.failures
    data = {
        "schema": SCHEMA,
        "count": args.count,
        "seed": args.seed,
        "degrees": [args.min_degree, args.max_degree],
        "checks": counts,
        "failures": [f.to_dict() for f in failures],
        "claim_failures": len(summary.claim_failures),
    }
    lines = [f"audit of {args.count} polynomials (seed {args.seed}, degrees {args.min_degree}..{args.max_degree})"]
    for name, c in sorted(counts.items()):
        lines.append(f"  {name:<34} pass {c['pass']:>5}  fail {c['fail']:>4}  skip {c['skip']:>4}")
    for f in failures[: args.show]:
        d = f.to_dict()
        lines.append(f"  FAIL {d['check']}: {d['polynomial']} expected {d['expected']} actual {d['actual']}")
    if len(failures) > args.show:
        lines.append(f"  ... {len(failures) - args.show} more failures (use --json for all)")
    lines.append("  (no-single-falsely-positive is a claim under test and does not affect the exit code)")
    _emit(data, args.json, "\n".join(lines) + "\n", out)
    return EXIT_AUDIT if failures else EXIT_OK


# argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="newtonrule",
        description="Root-count bounds for real polynomials: Newton's rule and its cubic-sector "
                    "modification, with Descartes, Budan-Fourier and Sturm for comparison.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one polynomial")
    a.add_argument("expr", help="polynomial expression, or '-' to read stdin")
    a.add_argument("--methods", default="all",
                   help="comma list of newton,modified,descartes,fourier,sturm,discriminant,bands,all")
    a.add_argument("--interval", type=_interval, help="q,r for Fourier and Sturm counts on (q, r]")
    a.add_argument("--json", action="store_true")
    a.add_argument("--digits", type=int, default=3)

    s = sub.add_parser("sweep", help="classify a one-parameter family over a grid")
    s.add_argument("expr")
    s.add_argument("--param", required=True)
    s.add_argument("--from", dest="start", type=_rational, required=True)
    s.add_argument("--to", dest="stop", type=_rational, required=True)
    s.add_argument("--step", type=_rational, required=True)
    s.add_argument("--json", action="store_true")

    t = sub.add_parser("threshold", help="isolate a regime boundary of a family by bisection")
    t.add_argument("expr")
    t.add_argument("--param", required=True)
    t.add_argument("--predicate", default="falsely-positive", help="falsely-positive or sign:A<k>")
    t.add_argument("--lo", type=_rational, required=True)
    t.add_argument("--hi", type=_rational, required=True)
    t.add_argument("--width", type=_rational, default=Fraction(1, 10000))
    t.add_argument("--digits", type=int, default=4)
    t.add_argument("--json", action="store_true")

    u = sub.add_parser("audit", help="check bounds and identities on a seeded random corpus")
    u.add_argument("--count", type=int, default=200)
    u.add_argument("--seed", type=int, default=0)
    u.add_argument("--max-degree", type=int, default=8)
    u.add_argument("--min-degree", type=int, default=3)
    u.add_argument("--show", type=int, default=10, help="failures listed in text output")
    u.add_argument("--json", action="store_true")
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    if args.command == "analyze":
        text = sys.stdin.read() if args.expr == "-" else args.expr
        try:
            methods = expand_methods(args.methods)
            req = AnalysisRequest(text.strip(), methods, args.interval,
                                  "json" if args.json else "text", args.digits)
        except ValueError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_PARSE
        return run(req, out, err)
    if args.command == "sweep":
        try:
            req = AnalysisRequest(args.expr, param=args.param, sweep=(args.start, args.stop, args.step),
                                  output="json" if args.json else "text")
        except ValueError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_PARSE
        return run(req, out, err)
    if args.command == "threshold":
        return cmd_threshold(args, out, err)
    return cmd_audit(args, out, err)


def main_entry():  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
