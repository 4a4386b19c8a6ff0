"""Independent checks: root-sum identities, Rosset's form, discriminant
identities, and exact-count audits of every root bound in the package.

Identities are tested by exact evaluation on random rational instances
(polynomial identity testing); nothing here uses floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classical import (
    count_real_roots,
    descartes_negative,
    descartes_positive,
    discriminant,
    discriminant_interpretation,
    fourier_bound,
    resultant_discriminant,
    root_bound,
)
from .cubic import CubicSector, classify_cubic, cubic_sectors
from .errors import DegreeError
from .poly import (
    BinomialForm,
    Polynomial,
    format_rational,
    nth_derivative,
    reciprocal,
    regularize,
    sum_squared_root_differences,
    to_binomial,
)
from .rules import combine_with_descartes, newton_complete, newton_modified, tabulate
from .sectors import Status

__all__ = [
    "AuditFinding",
    "AuditSummary",
    "QUARTIC_DD_CONSTANT",
    "check_spread_chain",
    "check_ratio_identities",
    "check_rosset",
    "rosset_lhs",
    "check_disc_of_disc",
    "check_classify_cubic",
    "check_single_falsely_positive",
    "check_isolated_falsely_positive",
    "audit_bounds",
    "random_polynomial",
    "random_corpus",
    "identity_findings",
    "run_audit",
]

# Discriminant, as a quadratic in a_1, of the discriminant of a binomial-form
# quartic's derivative, divided by A_3^3. Measured: 6912^2 * 16.
QUARTIC_DD_CONSTANT = 764411904


def _show(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (tuple, list)):
        return [_show(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_show(x) for x in v)
    return v


@dataclass(frozen=True)
class AuditFinding:
    """One check on one polynomial. Failures keep everything needed to rerun."""

    polynomial: Polynomial | None
    check: str
    expected: object
    actual: object
    verdict: str  # "pass" | "fail" | "skip"
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict != "fail"

    def to_dict(self) -> dict:
        return {
            "polynomial": None if self.polynomial is None else self.polynomial.to_text(),
            "coeffs": None if self.polynomial is None else [format_rational(c) for c in self.polynomial.coeffs],
            "check": self.check,
            "expected": _show(self.expected),
            "actual": _show(self.actual),
            "verdict": self.verdict,
            "note": self.note,
        }


def _finding(p, check, expected, actual, ok, note=""):
    return AuditFinding(p, check, expected, actual, "pass" if ok else "fail", note)


def _skip(p, check, note):
    return AuditFinding(p, check, None, None, "skip", note)


# root-sum identities -------------------------------------------------------


def check_spread_chain(p: Polynomial) -> AuditFinding:
    """Squared root differences of ``p``, ``p'`` and ``p''`` against ``A_{n-1}``.

    With ``A`` and ``a_n`` from the binomial form of ``p``::

        sum (lambda_i - lambda_j)^2 = n^2 (n-1)     A_{n-1} / a_n^2
        sum (mu_i - mu_j)^2         = (n-1)^2 (n-2) A_{n-1} / a_n^2
        sum (nu_i - nu_j)^2         = (n-2)^2 (n-3) A_{n-1} / a_n^2
    """
    n = p.degree
    if n < 3:
        raise DegreeError("chain check needs degree >= 3")
    bf = to_binomial(p)
    A = bf.quadratic_elements()
    base = A[n - 1] / bf.a[n] ** 2
    expected = tuple((n - j) ** 2 * (n - j - 1) * base for j in range(3))
    actual = tuple(sum_squared_root_differences(nth_derivative(p, j)) if n - j >= 2 else Fraction(0)
                   for j in range(3))
    return _finding(p, "spread-chain", expected, actual, expected == actual)


def check_ratio_identities(p: Polynomial) -> AuditFinding:
    """Cross-multiplied ``A_{j+1} / A_{n-1}`` identities for ``j = 0, 1, 2``.

    For the ``j``-th derivative ``q`` (roots ``rho``) the check is::

        A_{j+1} a_n^2 sum (rho_i - rho_k)^2 = A_{n-1} a_j^2 sum (1/rho_i - 1/rho_k)^2

    A case is skipped when ``a_j = 0`` (the reciprocal loses degree) or when
    ``q`` has degree below 2.
    """
    n = p.degree
    if n < 3:
        raise DegreeError("ratio identities need degree >= 3")
    bf = to_binomial(p)
    A, a = bf.quadratic_elements(), bf.a
    lhs, rhs, notes = [], [], []
    for j in range(3):
        q = nth_derivative(p, j)
        if q.degree < 2:
            continue
        if a[j] == 0:
            notes.append(f"A_{j + 1} skipped: a_{j} = 0")
            continue
        rec = reciprocal(q).poly
        lhs.append(A[j + 1] * a[n] ** 2 * sum_squared_root_differences(q))
        rhs.append(A[n - 1] * a[j] ** 2 * sum_squared_root_differences(rec))
    if not lhs:
        return _skip(p, "ratio-identities", "; ".join(notes))
    return _finding(p, "ratio-identities", tuple(rhs), tuple(lhs), lhs == rhs, "; ".join(notes))


# Rosset ----------------------------------------------------------------------


def rosset_lhs(E) -> Fraction:
    e0, e1, e2, e3 = E
    return 6 * e0 * e1 * e2 * e3 - 4 * e0 * e2 ** 3 - e0 ** 2 * e3 ** 2 - 4 * e1 ** 3 * e3 + 3 * e1 ** 2 * e2 ** 2


def check_rosset(sector: CubicSector) -> AuditFinding:
    """Rosset's quartic form equals ``1/27`` of the sector discriminant.

    ``E_k = (-1)^k a_{3-k} / a_3`` (see :meth:`BinomialForm.rosset_e`) makes
    the form equal ``Delta_3 / (27 c3^4)``; it is multiplied back by ``c3^4``.
    The note records the sign of the form.
    """
    bf = BinomialForm((sector.c0, sector.c1, sector.c2, sector.c3))
    E = [bf.rosset_e(k) for k in range(4)]
    actual = rosset_lhs(E) * sector.c3 ** 4
    expected = discriminant(sector.polynomial()) / 27
    sign = ">= 0" if actual >= 0 else "< 0"
    return _finding(sector.polynomial(), "rosset", expected, actual, actual == expected, f"form {sign}")


# discriminants of discriminants ---------------------------------------------


def _quadratic_in(f, t0=Fraction(0)):
    """Coefficients ``(c, b, a)`` of a function known to be quadratic, from 3 samples."""
    y0, y1, ym = f(t0), f(t0 + 1), f(t0 - 1)
    a = (y1 + ym) / 2 - y0
    b = (y1 - ym) / 2
    return y0, b, a


def _quad_disc(c, b, a):
    return b * b - 4 * a * c


def check_disc_of_disc(kind: str, coeffs) -> list:
    """Discriminant identities for a binomial-form cubic or quartic.

    ``coeffs`` are the simple elements ``(a_0, ..., a_n)``.

    cubic:
      * ``Delta_3 / 27`` is quadratic in ``a_0`` with discriminant ``16 A_2^3``;
      * the derivative ``3 (a_3 x^2 + 2 a_2 x + a_1)`` has ``Res(q, q') / lc = -36 A_2``
        (the conventional ``b^2 - 4ac`` is ``+36 A_2``; both are checked).
    quartic:
      * the discriminant of the derivative is quadratic in ``a_1`` with
        discriminant ``764411904 A_3^3``;
      * the second derivative has ``Res / lc = -576 A_3`` (conventional ``+576 A_3``).
    """
    a = tuple(Fraction(c) for c in coeffs)
    if kind == "cubic":
        if len(a) != 4:
            raise DegreeError("cubic needs 4 simple elements")
        bf = BinomialForm(a)
        p = bf.to_polynomial()
        A2 = bf.quadratic_elements()[2]

        def d3(t):
            return discriminant(BinomialForm((t,) + a[1:]).to_polynomial()) / 27

        dd = _quad_disc(*_quadratic_in(d3))
        dp = p.derivative()
        return [
            _finding(p, "delta2=16A2^3", 16 * A2 ** 3, dd, dd == 16 * A2 ** 3),
            _finding(p, "disc(p')=-36A2 [Res/lc]", -36 * A2, resultant_discriminant(dp),
                     resultant_discriminant(dp) == -36 * A2),
            _finding(p, "disc(p')=+36A2 [b^2-4ac]", 36 * A2, discriminant(dp), discriminant(dp) == 36 * A2),
        ]
    if kind == "quartic":
        if len(a) != 5:
            raise DegreeError("quartic needs 5 simple elements")
        bf = BinomialForm(a)
        p = bf.to_polynomial()
        A3 = bf.quadratic_elements()[3]

        def d4(t):
            b = (a[0], t) + a[2:]
            return discriminant(BinomialForm(b).to_polynomial().derivative())

        dd = _quad_disc(*_quadratic_in(d4))
        d2 = nth_derivative(p, 2)
        return [
            _finding(p, "disc-of-disc(p')=764411904A3^3", QUARTIC_DD_CONSTANT * A3 ** 3, dd,
                     dd == QUARTIC_DD_CONSTANT * A3 ** 3),
            _finding(p, "disc(p'')=-576A3 [Res/lc]", -576 * A3, resultant_discriminant(d2),
                     resultant_discriminant(d2) == -576 * A3),
            _finding(p, "disc(p'')=+576A3 [b^2-4ac]", 576 * A3, discriminant(d2), discriminant(d2) == 576 * A3),
        ]
    raise ValueError("kind must be 'cubic' or 'quartic'")


def check_classify_cubic(sector: CubicSector) -> AuditFinding:
    """The interval classification agrees with the sign of the discriminant."""
    cls = classify_cubic(sector)
    d = discriminant(sector.polynomial())
    if d > 0:
        want = "three-real-distinct"
    elif d < 0:
        want = "one-real-one-complex-pair"
    else:
        want = "three-real-with-double|triple-root"
    ok = cls.value in want.split("|")
    return _finding(sector.polynomial(), "classify-cubic", want, cls.value, ok)


# falsely positive structure --------------------------------------------------


def check_single_falsely_positive(p: Polynomial) -> AuditFinding:
    """Claim under test: a polynomial never has exactly one falsely positive element.

    The claim fails whenever the lone falsely positive element sits next to a
    negative one; failures are reported, not suppressed.
    """
    table = tabulate(p)
    fp = table.falsely_positive()
    note = "" if len(fp) != 1 else "statuses " + " ".join(s.value for s in table.status)
    return _finding(p, "no-single-falsely-positive", "count != 1", len(fp), len(fp) != 1, note)


def check_isolated_falsely_positive(p: Polynomial) -> AuditFinding:
    """Every falsely positive element has a falsely positive or negative neighbour.

    Equivalently no falsely positive run of length one is bounded by two
    positive elements.
    """
    table = tabulate(p)
    st = table.status
    lonely = [m for m in table.falsely_positive()
              if st[m - 1] not in (Status.FALSELY_POSITIVE, Status.NEGATIVE)
              and st[m + 1] not in (Status.FALSELY_POSITIVE, Status.NEGATIVE)]
    return _finding(p, "no-isolated-falsely-positive", [], lonely, not lonely)


# bound audits -----------------------------------------------------------------


def _dominates(p, name, bound, exact, parity=None):
    ok = exact <= bound and (parity is None or (parity - exact) % 2 == 0)
    rel = f">= {exact}" + ("" if parity is None else ", same parity")
    return _finding(p, name, bound, exact, ok, rel)


def audit_bounds(p: Polynomial) -> list:
    """Compare every bound with exact Sturm counts (with multiplicity).

    The polynomial is regularized first; all counts refer to the shifted
    polynomial, whose shift is stated in each finding's polynomial.
    """
    if not 2 <= p.degree <= 12:
        raise DegreeError("audit_bounds supports degree 2..12")
    q, beta = regularize(p)
    n = q.degree
    pos = count_real_roots(q, 0, None)
    neg = count_real_roots(q, None, 0)
    cplx = n - pos - neg
    dpos, dneg = descartes_positive(q), descartes_negative(q)
    B = root_bound(q)
    out = [
        _dominates(q, "descartes+", dpos, pos, dpos),
        _dominates(q, "descartes-", dneg, neg, dneg),
        _dominates(q, "fourier+", fourier_bound(q, 0, B), pos, fourier_bound(q, 0, B)),
        _dominates(q, "fourier-", fourier_bound(q, -B, 0), neg, fourier_bound(q, -B, 0)),
    ]
    orig = newton_complete(q)
    mod = newton_modified(tabulate(q))
    out += [
        _dominates(q, "newton+", orig.max_positive, pos),
        _dominates(q, "newton-", orig.max_negative, neg),
        _dominates(q, "modified+", mod.max_positive, pos),
        _dominates(q, "modified-", mod.max_negative, neg),
        _finding(q, "modified-total", mod.max_real, pos + neg, pos + neg <= mod.max_real,
                 f">= {pos + neg}"),
        _finding(q, "modified<=newton", (orig.max_positive, orig.max_negative),
                 (mod.max_positive, mod.max_negative),
                 mod.max_positive <= orig.max_positive and mod.max_negative <= orig.max_negative),
        _finding(q, "newton-min-complex", orig.min_complex, cplx, cplx >= orig.min_complex),
        _finding(q, "modified-min-complex", mod.min_complex, cplx, cplx >= mod.min_complex),
    ]
    comb = combine_with_descartes(mod, dpos, dneg)
    out += [
        _finding(q, "parity-set+", comb.positive_set, pos, pos in comb.positive_set),
        _finding(q, "parity-set-", comb.negative_set, neg, neg in comb.negative_set),
    ]
    verdict = discriminant_interpretation(discriminant(q), n)
    out.append(_finding(q, "discriminant-sign", verdict.complex_root_counts, cplx,
                        cplx in verdict.complex_root_counts))
    if beta:
        out = [AuditFinding(f.polynomial, f.check, f.expected, f.actual, f.verdict,
                            (f.note + "; " if f.note else "") + f"shifted by {format_rational(Fraction(beta))}")
               for f in out]
    return out


# generators and batch runs ---------------------------------------------------


def random_polynomial(rng: random.Random, degree: int, bound: int = 50) -> Polynomial:
    """Coefficients ``num/den`` with ``|num| <= bound`` and ``1 <= den <= bound``."""
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    coeffs.append(Fraction(lead, rng.randint(1, bound)))
    return Polynomial(coeffs)


def random_corpus(count: int, seed: int = 0, min_degree: int = 3, max_degree: int = 8,
                  bound: int = 50, regular: bool = True) -> list:
    """Deterministic list of random polynomials, regularized by default."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = random_polynomial(rng, rng.randint(min_degree, max_degree), bound)
        if regular:
            p, _ = regularize(p)
        out.append(p)
    return out


def identity_findings(p: Polynomial) -> list:
    """Every identity check that applies to ``p`` (degree >= 3)."""
    bf = to_binomial(p)
    out = [check_spread_chain(p), check_ratio_identities(p)]
    for s in cubic_sectors(bf):
        out.append(check_rosset(s))
        out.append(check_classify_cubic(s))
    out += check_disc_of_disc("cubic", bf.a[:4])
    if p.degree >= 4:
        out += check_disc_of_disc("quartic", bf.a[:5])
    return out


@dataclass
class AuditSummary:
    count: int
    seed: int
    findings: list = field(default_factory=list)
    claims: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [f for f in self.findings if f.verdict == "fail"]

    @property
    def claim_failures(self) -> list:
        return [f for f in self.claims if f.verdict == "fail"]

    def counts(self) -> dict:
        by: dict = {}
        for f in self.findings + self.claims:
            row = by.setdefault(f.check, {"pass": 0, "fail": 0, "skip": 0})
            row[f.verdict] += 1
        return by


def run_audit(count: int = 1000, seed: int = 0, max_degree: int = 8, min_degree: int = 3,
              identities: bool = True) -> AuditSummary:
    """Audit a seeded random corpus.

    ``findings`` hold identity and bound checks (any failure is an error);
    ``claims`` hold the falsely-positive structure claims, which are tracked
    separately because the single-element claim is known to be false.
    """
    corpus = random_corpus(count, seed, min_degree, max_degree)
    summary = AuditSummary(count, seed)
    for p in corpus:
        summary.findings += audit_bounds(p)
        if identities and p.degree >= 3:
            summary.findings += identity_findings(p)
        if p.degree >= 3:
            summary.claims.append(check_single_falsely_positive(p))
            summary.claims.append(check_isolated_falsely_positive(p))
    return summary
