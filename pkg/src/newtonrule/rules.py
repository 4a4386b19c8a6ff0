"""Newton's complete rule, its modification, and the all-real necessary condition."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .cubic import classify_elements
from .errors import DegreeError
from .poly import regularize, to_binomial
from .sectors import (
    ElementTable,
    Sign,
    Status,
    SuccessionTally,
    _as_binomial,
    negative_groups,
    quadratic_elements,
    successions,
)

__all__ = [
    "RootBoundReport",
    "Witness",
    "NecessaryCondition",
    "tabulate",
    "newton_complete",
    "modified_sequence",
    "newton_modified",
    "necessary_condition_all_real",
    "combine_with_descartes",
    "parity_set",
]


@dataclass(frozen=True)
class RootBoundReport:
    method: str
    max_positive: int
    max_negative: int
    min_complex: int
    tally: SuccessionTally
    table: ElementTable = field(repr=False, compare=False)
    modified_flips: tuple = ()
    positive_set: frozenset | None = None
    negative_set: frozenset | None = None

    @property
    def max_real(self) -> int:
        return self.max_positive + self.max_negative


def tabulate(bf) -> ElementTable:
    """Element table with truly/falsely positive status filled in.

    Degree-2 input has no cubic sectors; its table keeps the sign-only status.
    """
    bf = _as_binomial(bf)
    if bf.degree < 2:
        raise DegreeError("Newton's rules need degree >= 2")
    if bf.degree == 2:
        return quadratic_elements(bf)
    return classify_elements(bf)


def _report(method: str, table: ElementTable) -> RootBoundReport:
    tally = successions(table)
    return RootBoundReport(
        method=method,
        max_positive=tally.vP,
        max_negative=tally.pP,
        min_complex=2 * negative_groups(table),
        tally=tally,
        table=table,
        modified_flips=table.flips,
    )


def newton_complete(bf) -> RootBoundReport:
    """Complete rule: positive roots <= vP, negative roots <= pP."""
    if isinstance(bf, ElementTable):
        return _report("newton", bf)
    bf = _as_binomial(bf)
    if bf.degree < 2:
        raise DegreeError("Newton's rules need degree >= 2")
    return _report("newton", quadratic_elements(bf))


def modified_sequence(table: ElementTable) -> ElementTable:
    """Flip every maximal run of falsely positive elements bounded by positives.

    Runs touching a negative element on either side keep their signs.
    End caps count as positive neighbours.
    """
    status = table.status
    signs = list(table.quadratic_signs)
    flips = []
    m = 0
    n = len(status) - 1
    while m <= n:
        if status[m] is not Status.FALSELY_POSITIVE:
            m += 1
            continue
        start = m
        while m <= n and status[m] is Status.FALSELY_POSITIVE:
            m += 1
        end = m - 1
        left, right = status[start - 1], status[end + 1]
        if left.is_positive and right.is_positive:
            for k in range(start, end + 1):
                signs[k] = Sign.NEGATIVE
            flips.append((start, end))
    return replace(table, quadratic_signs=tuple(signs), flips=table.flips + tuple(flips))


def newton_modified(bf) -> RootBoundReport:
    """Complete rule applied to the modified sign sequence."""
    table = bf if isinstance(bf, ElementTable) else tabulate(bf)
    return _report("modified-newton", modified_sequence(table))


@dataclass(frozen=True)
class Witness:
    element: int
    reason: str
    shifted_by: object = 0

    def __str__(self):
        s = f"A_{self.element}: {self.reason}"
        if self.shifted_by:
            s += f" (after shift x -> x + {self.shifted_by})"
        return s


@dataclass(frozen=True)
class NecessaryCondition:
    holds: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.holds


def necessary_condition_all_real(bf) -> NecessaryCondition:
    """All-real necessary condition: no negative, vanishing or falsely positive element.

    When every interior element is positive but a coefficient vanishes (so a
    prescribed interval is undefined), the test runs on the regularized shift;
    reality of all roots is translation invariant, so the condition stays
    necessary.
    """
    bf = _as_binomial(bf)
    n = bf.degree
    if n < 3:
        raise DegreeError("the cubic-sector condition needs degree >= 3")
    A = bf.quadratic_elements()
    for m in range(1, n):
        if A[m] < 0:
            return NecessaryCondition(False, Witness(m, "negative"))
        if A[m] == 0:
            return NecessaryCondition(False, Witness(m, "vanishing"))
    beta = 0
    if any(v == 0 for v in bf.a):
        p, beta = regularize(bf.to_polynomial())
        bf = to_binomial(p)
    table = classify_elements(bf)
    for m in range(1, n):
        st = table.status[m]
        if st is Status.TRULY_POSITIVE:
            continue
        if st is Status.FALSELY_POSITIVE:
            outside = [c.adjacent for c in table.checks if c.element == m and not c.inside]
            reason = "falsely positive (adjacent " + ", ".join(f"a_{k}" for k in outside) + \
                " outside its prescribed interval)"
        else:
            reason = st.value
        return NecessaryCondition(False, Witness(m, reason, beta))
    return NecessaryCondition(True)


def parity_set(bound: int, descartes: int) -> frozenset:
    """Counts ``c`` with ``0 <= c <= min(bound, descartes)`` and ``c = descartes (mod 2)``."""
    top = min(bound, descartes)
    return frozenset(c for c in range(0, top + 1) if (descartes - c) % 2 == 0)


def combine_with_descartes(report: RootBoundReport, descartes_pos: int, descartes_neg: int) -> RootBoundReport:
    return replace(
        report,
        positive_set=parity_set(report.max_positive, descartes_pos),
        negative_set=parity_set(report.max_negative, descartes_neg),
    )
