"""Simple and quadratic elements, their signs, and succession tallies."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum, IntEnum

from .errors import DegreeError, NotRegularizedError
from .poly import BinomialForm, Polynomial, to_binomial

__all__ = [
    "Sign",
    "Status",
    "ElementTable",
    "SuccessionTally",
    "sign_of",
    "quadratic_elements",
    "successions",
    "successions_vector",
    "negative_groups",
]


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @property
    def symbol(self) -> str:
        return {-1: "-", 0: "0", 1: "+"}[int(self)]


class Status(Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    TRULY_POSITIVE = "truly-positive"
    FALSELY_POSITIVE = "falsely-positive"
    END_CAP = "end-cap"

    @property
    def is_positive(self) -> bool:
        return self in (Status.TRULY_POSITIVE, Status.END_CAP)


def sign_of(v) -> Sign:
    return Sign((v > 0) - (v < 0))


@dataclass(frozen=True)
class ElementTable:
    """Double sequence of simple elements ``a_k`` and quadratic elements ``A_k``.

    ``quadratic_signs`` may differ from the signs of ``quadratic`` after the
    modified rule flips runs of falsely positive elements; ``flips`` lists the
    flipped runs as inclusive ``(first, last)`` index pairs.
    """

    simple: tuple
    quadratic: tuple
    simple_signs: tuple
    quadratic_signs: tuple
    status: tuple
    flips: tuple = ()
    checks: tuple = field(default=(), compare=False)

    @property
    def degree(self) -> int:
        return len(self.simple) - 1

    def falsely_positive(self) -> list:
        return [m for m, s in enumerate(self.status) if s is Status.FALSELY_POSITIVE]

    def with_status(self, status, checks=()) -> "ElementTable":
        return replace(self, status=tuple(status), checks=tuple(checks))

    def sign_rows(self) -> tuple:
        """The two sign rows as strings, high index first (highest index on the left)."""
        top = ",".join(s.symbol for s in reversed(self.simple_signs))
        bottom = ",".join(s.symbol for s in reversed(self.quadratic_signs))
        return top, bottom


@dataclass(frozen=True)
class SuccessionTally:
    pP: int
    vV: int
    pV: int
    vP: int

    @property
    def n(self) -> int:
        return self.pP + self.vV + self.pV + self.vP

    def as_dict(self) -> dict:
        return {"pP": self.pP, "vV": self.vV, "pV": self.pV, "vP": self.vP}


def _as_binomial(p) -> BinomialForm:
    if isinstance(p, BinomialForm):
        return p
    if isinstance(p, Polynomial):
        return to_binomial(p)
    raise TypeError(f"expected BinomialForm or Polynomial, got {type(p).__name__}")


def quadratic_elements(bf) -> ElementTable:
    """Tabulate ``a_k`` and ``A_k`` with their signs.

    Interior positive elements start out as TRULY_POSITIVE placeholders;
    :func:`newtonrule.cubic.classify_elements` refines them.
    """
    bf = _as_binomial(bf)
    n = bf.degree
    if n < 2:
        raise DegreeError("quadratic elements need degree >= 2")
    A = bf.quadratic_elements()
    status = []
    for m, v in enumerate(A):
        if m in (0, n):
            status.append(Status.END_CAP)
        elif v > 0:
            status.append(Status.TRULY_POSITIVE)
        elif v < 0:
            status.append(Status.NEGATIVE)
        else:
            status.append(Status.ZERO)
    # end caps are squares; treated as positive even if a_0 happens to vanish
    qsigns = [sign_of(v) for v in A]
    qsigns[0] = qsigns[n] = Sign.POSITIVE
    return ElementTable(
        simple=bf.a,
        quadratic=A,
        simple_signs=tuple(sign_of(v) for v in bf.a),
        quadratic_signs=tuple(qsigns),
        status=tuple(status),
    )


def _check_no_zero(table: ElementTable):
    for row, name in ((table.simple_signs, "coefficient a"), (table.quadratic_signs, "quadratic element A")):
        for k, s in enumerate(row):
            if s is Sign.ZERO:
                raise NotRegularizedError(
                    f"{name}_{k} is zero; regularize the polynomial (shift x -> x + beta) first")


def successions(table: ElementTable) -> SuccessionTally:
    """Count pP, vV, pV, vP over the n adjacent couples (direct comparison)."""
    _check_no_zero(table)
    s, S = table.simple_signs, table.quadratic_signs
    tally = {"pP": 0, "vV": 0, "pV": 0, "vP": 0}
    for k in range(table.degree):
        small = "p" if s[k] == s[k + 1] else "v"
        big = "P" if S[k] == S[k + 1] else "V"
        tally[small + big] += 1
    return SuccessionTally(**tally)


def successions_vector(table: ElementTable) -> SuccessionTally:
    """Same tally through the variance-vector arithmetic.

    ``s`` and ``S`` mark sign changes of the simple and quadratic rows;
    ``q = s - S`` separates vP (+1) from pV (-1), and ``Q = s + S - 1``
    separates vV (+1) from pP (-1).
    """
    _check_no_zero(table)
    a, A = table.simple_signs, table.quadratic_signs
    n = table.degree
    s = [abs(int(a[j]) - int(a[j - 1])) // 2 for j in range(1, n + 1)]
    S = [abs(int(A[j]) - int(A[j - 1])) // 2 for j in range(1, n + 1)]
    q = [x - y for x, y in zip(s, S)]
    Q = [x + y - 1 for x, y in zip(s, S)]
    vP = sum(v + abs(v) for v in q) // 2
    pV = -sum(v - abs(v) for v in q) // 2
    vV = sum(v + abs(v) for v in Q) // 2
    pP = -sum(v - abs(v) for v in Q) // 2
    return SuccessionTally(pP=pP, vV=vV, pV=pV, vP=vP)


def negative_groups(table_or_signs) -> int:
    """Number of maximal runs of negative quadratic signs."""
    signs = table_or_signs.quadratic_signs if isinstance(table_or_signs, ElementTable) else table_or_signs
    groups = 0
    prev_neg = False
    for s in signs:
        neg = int(s) < 0
        if neg and not prev_neg:
            groups += 1
        prev_neg = neg
    return groups
