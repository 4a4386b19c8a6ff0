"""Analysis reports as plain dicts (JSON-ready) plus a text renderer.

Every rational in a report is an exact ``"num/den"`` string. Decimal
displays carry ``=`` (exact) or ``≈`` (rounded) markers. The text form is
rendered from the dict, so both forms carry the same verdicts.
"""

from __future__ import annotations

from fractions import Fraction

from .classical import (
    count_real_roots,
    descartes_negative,
    descartes_positive,
    discriminant,
    discriminant_interpretation,
    exact_root_in,
    fourier_bound,
    fourier_signs,
    format_enclosure,
    isolate_real_roots,
    privileged_free_terms,
    root_bound,
    sturm_chain,
    sturm_count,
)
from .errors import DegreeError, NotRegularizedError
from .poly import Polynomial, format_rational, regularize
from .rules import (
    combine_with_descartes,
    necessary_condition_all_real,
    newton_complete,
    newton_modified,
    tabulate,
)

SCHEMA = 1
METHODS = ("newton", "modified", "descartes", "fourier", "sturm", "discriminant", "bands")

__all__ = ["SCHEMA", "METHODS", "analyze", "render_text", "expand_methods"]


def _r(q) -> str:
    return format_rational(Fraction(q))


def _signs(seq) -> str:
    return "".join(s.symbol for s in seq)


def expand_methods(methods) -> tuple:
    if methods is None:
        return METHODS
    if isinstance(methods, str):
        methods = [m.strip() for m in methods.split(",") if m.strip()]
    out = []
    for m in methods:
        if m == "all":
            return METHODS
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; choose from {', '.join(METHODS + ('all',))}")
        if m not in out:
            out.append(m)
    return tuple(out)


def _root_dict(p, iv, digits) -> dict:
    exact = exact_root_in(p, iv.lo, iv.hi)
    out = {"lo": _r(iv.lo), "hi": _r(iv.hi), "multiplicity": iv.multiplicity,
           "exact": None if exact is None else _r(exact)}
    if exact is not None:
        out["display"] = format_enclosure(exact, exact, digits)
    else:
        out["display"] = format_enclosure(iv.lo, iv.hi, digits)
    return out


def _table_dict(table) -> dict:
    rows = []
    for k in range(table.degree, -1, -1):
        rows.append({
            "k": k,
            "a": _r(table.simple[k]),
            "a_sign": table.simple_signs[k].symbol,
            "A": _r(table.quadratic[k]),
            "A_sign": table.quadratic_signs[k].symbol,
            "status": table.status[k].value,
        })
    checks = []
    for c in table.checks:
        iv = c.interval
        entry = {
            "element": c.element,
            "adjacent": c.adjacent,
            "sector": c.sector,
            "side": iv.side,
            "inside": c.inside,
            "u": _r(iv.u), "A": _r(iv.A), "d": _r(iv.d),
        }
        if not iv.is_empty:
            lo, hi = iv.decimal_endpoints(3)
            entry["interval"] = f"≈[{lo}, {hi}]"
        checks.append(entry)
    return {"rows": rows, "checks": checks}


def _bounds_dict(rep) -> dict:
    return {
        "tally": rep.tally.as_dict(),
        "max_positive": rep.max_positive,
        "max_negative": rep.max_negative,
        "max_real": rep.max_real,
        "min_complex": rep.min_complex,
    }


def analyze(p: Polynomial, methods=None, interval=None, digits: int = 3) -> dict:
    """Run the selected methods on ``p`` and return the report dict."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    methods = expand_methods(methods)
    if interval is not None:
        q, r = (Fraction(v) for v in interval)
        if not q < r:
            raise ValueError("interval needs q < r")
        interval = (q, r)
    n = p.degree
    rep: dict = {
        "schema": SCHEMA,
        "polynomial": p.to_text(),
        "coeffs": [_r(c) for c in p.coeffs],
        "degree": n,
        "request": {
            "methods": list(methods),
            "interval": None if interval is None else [_r(v) for v in interval],
            "digits": digits,
        },
        "notes": [],
        "methods": {},
    }
    if n < 1:
        raise DegreeError("need a polynomial of degree >= 1")
    out = rep["methods"]
    dpos, dneg = descartes_positive(p), descartes_negative(p)

    wants_newton = "newton" in methods or "modified" in methods
    if wants_newton:
        try:
            if n < 2:
                raise DegreeError("Newton's rules need degree >= 2")
            q, beta = regularize(p)
        except (DegreeError, NotRegularizedError) as exc:
            rep["notes"].append(f"Newton methods skipped: {exc}")
        else:
            if beta:
                rep["notes"].append(
                    f"regularized: zero coefficient or quadratic element; Newton methods use "
                    f"p(x + {_t(_r(beta))}) = {q.to_text()} (positive/negative bounds refer to it)")
            rep["regularization"] = {"beta": _r(beta), "polynomial": q.to_text()}
            table = tabulate(q)
            qpos, qneg = descartes_positive(q), descartes_negative(q)
            if "newton" in methods:
                orig = newton_complete(table)
                out["newton"] = {"table": _table_dict(table), "signs": {
                    "simple": _signs(reversed(table.simple_signs)),
                    "quadratic": _signs(reversed(table.quadratic_signs))}, **_bounds_dict(orig)}
            if "modified" in methods:
                mod = combine_with_descartes(newton_modified(table), qpos, qneg)
                section = {
                    "falsely_positive": table.falsely_positive(),
                    "flipped_runs": [list(f) for f in mod.modified_flips],
                    "signs": {"simple": _signs(reversed(mod.table.simple_signs)),
                              "quadratic": _signs(reversed(mod.table.quadratic_signs))},
                    **_bounds_dict(mod),
                    "positive_set": sorted(mod.positive_set),
                    "negative_set": sorted(mod.negative_set),
                }
                if "newton" not in methods:
                    section["table"] = _table_dict(table)
                if n >= 3:
                    nc = necessary_condition_all_real(p)
                    section["all_real_condition"] = {
                        "holds": nc.holds,
                        "witness": None if nc.witness is None else str(nc.witness),
                    }
                out["modified"] = section

    if "descartes" in methods:
        out["descartes"] = {"positive": dpos, "negative": dneg}

    if "fourier" in methods:
        B = root_bound(p)
        lo, hi = interval if interval is not None else (-B, B)
        section = {"interval": [_r(lo), _r(hi)],
                   "signs_lo": _signs(fourier_signs(p, lo)),
                   "signs_hi": _signs(fourier_signs(p, hi)),
                   "bound": fourier_bound(p, lo, hi)}
        if interval is None and p(0) != 0:
            section["positive_bound"] = fourier_bound(p, 0, B)
            section["negative_bound"] = fourier_bound(p, -B, 0)
        out["fourier"] = section

    if "sturm" in methods:
        chain = sturm_chain(p)
        zero = 1 if p(0) == 0 else 0
        pos = sturm_count(p, 0, None, chain=chain)
        neg = sturm_count(p, None, 0, chain=chain) - zero
        width = Fraction(1, 10 ** (digits + 2))
        roots = isolate_real_roots(p, width)
        section = {
            "distinct_positive": pos,
            "distinct_negative": neg,
            "zero_root": bool(zero),
            "distinct_real": pos + neg + zero,
            "real_with_multiplicity": count_real_roots(p),
            "roots": [_root_dict(p, iv, digits) for iv in roots],
            "chain_length": len(chain),
        }
        if interval is not None:
            section["interval"] = [_r(v) for v in interval]
            section["in_interval"] = sturm_count(p, *interval, chain=chain)
            section["signs_lo"] = _signs(chain.signs_at(interval[0]))
            section["signs_hi"] = _signs(chain.signs_at(interval[1]))
        out["sturm"] = section

    if "discriminant" in methods:
        if n < 2:
            rep["notes"].append("discriminant needs degree >= 2; skipped")
        else:
            d = discriminant(p)
            verdict = discriminant_interpretation(d, n)
            out["discriminant"] = {
                "value": _r(d),
                "sign": verdict.sign,
                "nonreal_root_counts": list(verdict.complex_root_counts),
                "repeated_root": verdict.repeated_root,
            }

    if "bands" in methods:
        if n < 2:
            rep["notes"].append("bands need degree >= 2; skipped")
        else:
            terms = privileged_free_terms(p, digits)
            out["bands"] = {"privileged_free_terms": [
                {"lo": _r(t.lo), "hi": _r(t.hi), "display": t.decimal(digits)} for t in terms]}
    return rep


# text rendering -------------------------------------------------------------


def _t(v) -> str:
    """Text form of an exact rational string: integers lose their ``/1``."""
    v = str(v)
    return v[:-2] if v.endswith("/1") else v


def _set(s) -> str:
    return "{" + ", ".join(str(v) for v in sorted(s, reverse=True)) + "}"


def _render_table(lines, table):
    lines.append(f"    {'k':>3}  {'a_k':>14} {'':1}  {'A_k':>16} {'':1}  status")
    for row in table["rows"]:
        lines.append(f"    {row['k']:>3}  {_t(row['a']):>14} {row['a_sign']}  {_t(row['A']):>16} {row['A_sign']}  {row['status']}")
    bad = [c for c in table["checks"] if not c["inside"]]
    for c in bad:
        lines.append(f"    A_{c['element']}: adjacent a_{c['adjacent']} outside {c.get('interval', 'empty interval')}")


def render_text(rep: dict) -> str:
    lines = [f"polynomial: {rep['polynomial']}", f"degree: {rep['degree']}"]
    for note in rep["notes"]:
        lines.append(f"note: {note}")
    m = rep["methods"]
    if "newton" in m:
        s = m["newton"]
        lines.append("[newton] complete rule")
        _render_table(lines, s["table"])
        lines.append(f"  signs a: {s['signs']['simple']}   A: {s['signs']['quadratic']}")
        t = s["tally"]
        lines.append(f"  successions: pP={t['pP']} vV={t['vV']} pV={t['pV']} vP={t['vP']}")
        lines.append(f"  bounds: positive <= {s['max_positive']}, negative <= {s['max_negative']}, "
                     f"complex >= {s['min_complex']}")
    if "modified" in m:
        s = m["modified"]
        lines.append("[modified] modified rule")
        if "table" in s:
            _render_table(lines, s["table"])
        fp = ", ".join(f"A_{k}" for k in s["falsely_positive"]) or "none"
        runs = ", ".join(f"A_{a}..A_{b}" if a != b else f"A_{a}" for a, b in s["flipped_runs"]) or "none"
        lines.append(f"  falsely positive: {fp}")
        lines.append(f"  flipped runs: {runs}")
        lines.append(f"  signs a: {s['signs']['simple']}   A~: {s['signs']['quadratic']}")
        t = s["tally"]
        lines.append(f"  successions: pP={t['pP']} vV={t['vV']} pV={t['pV']} vP={t['vP']}")
        lines.append(f"  bounds: positive <= {s['max_positive']}, negative <= {s['max_negative']}, "
                     f"complex >= {s['min_complex']}")
        lines.append(f"  with Descartes: positive in {_set(s['positive_set'])}, "
                     f"negative in {_set(s['negative_set'])}")
        if "all_real_condition" in s:
            c = s["all_real_condition"]
            lines.append("  all-real necessary condition: " +
                         ("holds" if c["holds"] else f"fails ({c['witness']})"))
    if "descartes" in m:
        s = m["descartes"]
        lines.append(f"[descartes] positive <= {s['positive']}, negative <= {s['negative']}")
    if "fourier" in m:
        s = m["fourier"]
        lo, hi = map(_t, s["interval"])
        lines.append(f"[fourier] on ({lo}, {hi}]: signs {s['signs_lo']} -> {s['signs_hi']}, "
                     f"at most {s['bound']} roots")
        if "positive_bound" in s:
            lines.append(f"  positive <= {s['positive_bound']}, negative <= {s['negative_bound']}")
    if "sturm" in m:
        s = m["sturm"]
        lines.append(f"[sturm] distinct real roots: positive {s['distinct_positive']}, "
                     f"negative {s['distinct_negative']}, zero {int(s['zero_root'])}; "
                     f"with multiplicity {s['real_with_multiplicity']}")
        if s["roots"]:
            shown = ", ".join(r["display"] + (f" (x{r['multiplicity']})" if r["multiplicity"] > 1 else "")
                              for r in s["roots"])
            lines.append(f"  roots: {shown}")
        if "in_interval" in s:
            lo, hi = map(_t, s["interval"])
            lines.append(f"  on ({lo}, {hi}]: {s['in_interval']} distinct roots; "
                         f"chain signs {s['signs_lo']} -> {s['signs_hi']}")
    if "discriminant" in m:
        s = m["discriminant"]
        counts = _set(s["nonreal_root_counts"])
        lines.append(f"[discriminant] value {_t(s['value'])} (sign {'+-0'[[1, -1, 0].index(s['sign'])]}); "
                     f"non-real roots in {counts}" + ("; repeated root" if s["repeated_root"] else ""))
    if "bands" in m:
        terms = m["bands"]["privileged_free_terms"]
        shown = ", ".join(t["display"] for t in terms) or "none (no real stationary points)"
        lines.append(f"[bands] privileged free terms: {shown}")
    return "\n".join(lines) + "\n"
