"""Parametric families: sweeps over a parameter and regime-boundary isolation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classical import IsolatingInterval, count_real_roots, discriminant
from .cubic import cubic_sectors, interval_contains, prescribed_interval
from .errors import NotRegularizedError, PolynomialError
from .parser import ParametricPolynomial
from .poly import Polynomial, as_fraction, is_regular, to_binomial
from .rules import newton_complete, newton_modified, tabulate
from .sectors import Status

__all__ = [
    "SweepRow",
    "sweep",
    "frange",
    "isolate_threshold",
    "make_predicate",
    "has_falsely_positive",
    "parametric_binomial",
    "parametric_quadratic_elements",
    "parametric_discriminant",
    "interpolate",
]


def interpolate(xs, ys) -> Polynomial:
    """Lagrange interpolation through exact points."""
    xs = [as_fraction(x) for x in xs]
    out = Polynomial((0,))
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Polynomial((as_fraction(yi),))
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Polynomial((-xj, 1)) / (xi - xj)
        out = out + term
    return out


def parametric_binomial(pp: ParametricPolynomial) -> list:
    """Simple elements ``a_k`` of the family, each a polynomial in the parameter."""
    from math import comb

    n = pp.degree
    return [c / comb(n, k) for k, c in enumerate(pp.coeffs)]


def parametric_quadratic_elements(pp: ParametricPolynomial) -> list:
    """``A_0 .. A_n`` as polynomials in the parameter (exact, no sampling)."""
    a = parametric_binomial(pp)
    n = len(a) - 1
    return [a[0] * a[0]] + [a[m] * a[m] - a[m - 1] * a[m + 1] for m in range(1, n)] + [a[n] * a[n]]


def parametric_discriminant(pp: ParametricPolynomial) -> Polynomial:
    """Discriminant of the family as a polynomial in the parameter.

    The degree in the parameter is at most ``(2n - 2) * d`` where ``d`` bounds
    the coefficient degrees, so that many sample points pin it down; samples
    where the leading coefficient vanishes are skipped.
    """
    n = pp.degree
    d = max(c.degree for c in pp.coeffs)
    need = (2 * n - 2) * max(d, 0) + 1
    xs, ys = [], []
    k = 0
    while len(xs) < need:
        t = Fraction(k)
        if pp.coeffs[-1](t) != 0:
            xs.append(t)
            ys.append(discriminant(pp(t)))
        k += 1
    return interpolate(xs, ys)


# predicates ---------------------------------------------------------------------


def has_falsely_positive(p: Polynomial) -> bool:
    """Some non-negative interior ``A_m`` has an adjacent coefficient outside its interval.

    Vanishing elements are included (their interval is a single point), which
    makes the predicate well defined on the boundary ``A_m = 0`` of a regime.
    """
    bf = to_binomial(p)
    n = bf.degree
    if n < 3:
        return False
    A = bf.quadratic_elements()
    sectors = cubic_sectors(bf)
    for m in range(1, n):
        if A[m] < 0:
            continue
        if m >= 2 and not interval_contains(prescribed_interval(sectors[m - 2], "low"), bf.a[m - 2]):
            return True
        if m <= n - 2 and not interval_contains(prescribed_interval(sectors[m - 1], "high"), bf.a[m + 2]):
            return True
    return False


def make_predicate(kind):
    """Turn ``"falsely-positive"`` or ``"sign:A<k>"`` into a callable on polynomials."""
    if callable(kind):
        return kind
    if kind == "falsely-positive":
        return has_falsely_positive
    if isinstance(kind, str) and kind.startswith("sign:A"):
        k = int(kind[len("sign:A"):])

        def positive_element(p: Polynomial) -> bool:
            A = to_binomial(p).quadratic_elements()
            if not 0 <= k < len(A):
                raise PolynomialError(f"A_{k} does not exist for degree {p.degree}")
            return A[k] > 0

        positive_element.__name__ = f"sign_A{k}"
        return positive_element
    raise ValueError(f"unknown predicate {kind!r}; use 'falsely-positive' or 'sign:A<k>'")


def isolate_threshold(parametric: ParametricPolynomial, classifier, lo, hi, width) -> IsolatingInterval:
    """Bisect on an exact predicate until the verdict change sits in ``(lo, hi]``.

    ``hi - lo <= width`` on return. Raises ``ValueError`` when the verdicts
    at both ends agree.
    """
    pred = make_predicate(classifier)
    lo, hi, width = as_fraction(lo), as_fraction(hi), as_fraction(width)
    if not lo < hi or width <= 0:
        raise ValueError("need lo < hi and width > 0")
    vlo, vhi = pred(parametric(lo)), pred(parametric(hi))
    if vlo == vhi:
        raise ValueError(f"predicate gives {vlo} at both ends; no threshold to isolate")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if pred(parametric(mid)) == vlo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


# sweeps ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    value: Fraction
    polynomial: Polynomial
    regime: str
    status: tuple
    falsely_positive: tuple
    newton: tuple | None  # (max positive, max negative)
    modified: tuple | None
    real_roots: int
    note: str = ""


def frange(start, stop, step) -> list:
    """Exact arithmetic progression ``start, start+step, ...`` up to and including ``stop``."""
    start, stop, step = as_fraction(start), as_fraction(stop), as_fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    out = []
    v = start
    while v <= stop:
        out.append(v)
        v += step
    return out


def _regime(status) -> str:
    if any(s is Status.NEGATIVE for s in status):
        return "negative"
    if any(s is Status.ZERO for s in status):
        return "zero"
    if any(s is Status.FALSELY_POSITIVE for s in status):
        return "falsely-positive"
    return "truly-positive"


def sweep(parametric: ParametricPolynomial, start, stop, step) -> list:
    """Classify each member of the family over an exact grid of parameter values."""
    rows = []
    for v in frange(start, stop, step):
        p = parametric(v)
        if p.degree < parametric.degree:
            rows.append(SweepRow(v, p, "degenerate", (), (), None, None, count_real_roots(p),
                                 "leading coefficient vanishes"))
            continue
        real = count_real_roots(p)
        if not is_regular(p):
            inner = to_binomial(p).quadratic_elements()[1:-1]
            regime = "negative" if any(x < 0 for x in inner) else "zero" if 0 in inner else "irregular"
            rows.append(SweepRow(v, p, regime, (), (), None, None, real,
                                 "zero coefficient or element; not classified"))
            continue
        try:
            table = tabulate(p)
        except NotRegularizedError as exc:  # pragma: no cover - guarded by is_regular
            rows.append(SweepRow(v, p, "irregular", (), (), None, None, real, str(exc)))
            continue
        orig = newton_complete(table)
        mod = newton_modified(table)
        rows.append(SweepRow(
            value=v,
            polynomial=p,
            regime=_regime(table.status[1:-1]),
            status=table.status,
            falsely_positive=tuple(table.falsely_positive()),
            newton=(orig.max_positive, orig.max_negative),
            modified=(mod.max_positive, mod.max_negative),
            real_roots=real,
        ))
    return rows
