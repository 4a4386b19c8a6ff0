"""Cubic sectors, prescribed intervals, and truly/falsely positive elements.

A cubic sector is ``c3 x^3 + 3 c2 x^2 + 3 c1 x + c0`` built from four
consecutive simple elements ``(a_{m+3}, a_{m+2}, a_{m+1}, a_m)``. Its two
quadratic elements are ``B1 = c1^2 - c0 c2`` (adjacent coefficient ``c3``)
and ``B2 = c2^2 - c1 c3`` (adjacent coefficient ``c0``). The sector has three
real roots exactly when ``B2 >= 0`` and ``c0`` lies in
``[(u - 2 B2^{3/2}) / c3^2, (u + 2 B2^{3/2}) / c3^2]`` with
``u = c2^3 - 3 c2 B2``; the mirror statement holds for ``B1`` and ``c3``.
Membership is decided exactly by ``(v d - u)^2 <= 4 A^3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from math import isqrt

from .errors import DegreeError, NotRegularizedError
from .poly import Polynomial
from .sectors import ElementTable, Status, _as_binomial, quadratic_elements

__all__ = [
    "CubicSector",
    "PrescribedInterval",
    "CubicRootClass",
    "AdjacentCheck",
    "cubic_sectors",
    "prescribed_interval",
    "interval_contains",
    "classify_cubic",
    "classify_elements",
    "sqrt_bounds",
    "decimal_floor",
    "decimal_ceil",
    "decimal_nearest",
]


@dataclass(frozen=True)
class CubicSector:
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction
    index: int = 0

    @property
    def B1(self) -> Fraction:
        return self.c1 * self.c1 - self.c0 * self.c2

    @property
    def B2(self) -> Fraction:
        return self.c2 * self.c2 - self.c1 * self.c3

    def polynomial(self) -> Polynomial:
        return Polynomial((self.c0, 3 * self.c1, 3 * self.c2, self.c3))

    def reciprocal(self) -> "CubicSector":
        return CubicSector(self.c0, self.c1, self.c2, self.c3, self.index)

    def label(self) -> str:
        m = self.index
        return f"(a{m + 3}, a{m + 2}, a{m + 1}, a{m})"


class CubicRootClass(Enum):
    THREE_REAL_DISTINCT = "three-real-distinct"
    THREE_REAL_WITH_DOUBLE = "three-real-with-double"
    TRIPLE_ROOT = "triple-root"
    ONE_REAL_ONE_COMPLEX_PAIR = "one-real-one-complex-pair"

    @property
    def three_real(self) -> bool:
        return self is not CubicRootClass.ONE_REAL_ONE_COMPLEX_PAIR


def cubic_sectors(bf) -> list:
    """The ``n - 2`` overlapping sectors, ordered by low index ``m``."""
    bf = _as_binomial(bf)
    n = bf.degree
    if n < 3:
        raise DegreeError("cubic sectors need degree >= 3")
    a = bf.a
    return [CubicSector(a[m + 3], a[m + 2], a[m + 1], a[m], m) for m in range(n - 2)]


# exact square roots and directed decimal rounding ---------------------------


def sqrt_bounds(q: Fraction, scale: int) -> tuple:
    """Rationals ``lo <= sqrt(q) <= hi`` with ``hi - lo <= 1/scale``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    n, d = q.numerator, q.denominator
    m = isqrt(n * d * scale * scale)
    lo = Fraction(m, scale * d)
    if m * m == n * d * scale * scale:
        return lo, lo
    return lo, Fraction(m + 1, scale * d)


def decimal_floor(q: Fraction, digits: int) -> Decimal:
    scale = 10 ** digits
    return Decimal((q * scale).__floor__()).scaleb(-digits)


def decimal_ceil(q: Fraction, digits: int) -> Decimal:
    scale = 10 ** digits
    return Decimal((q * scale).__ceil__()).scaleb(-digits)


def decimal_nearest(q: Fraction, digits: int) -> Decimal:
    """Round half to even at ``digits`` places, exactly."""
    return Decimal(round(Fraction(q) * 10 ** digits)).scaleb(-digits)


@dataclass(frozen=True)
class PrescribedInterval:
    """``[(u - 2 A^{3/2}) / d, (u + 2 A^{3/2}) / d]``; empty when ``A < 0``.

    ``adjacent`` is the sector coefficient the interval is prescribed for and
    ``side`` says which quadratic element owns it (``"low"``: ``B2`` with
    adjacent ``c0``; ``"high"``: ``B1`` with adjacent ``c3``).
    """

    u: Fraction
    A: Fraction
    d: Fraction
    side: str = "low"
    adjacent: Fraction | None = None

    @property
    def is_empty(self) -> bool:
        return self.A < 0

    @property
    def is_point(self) -> bool:
        return self.A == 0

    def contains(self, v) -> bool:
        return interval_contains(self, v)

    def endpoint_bounds(self, eps: Fraction = Fraction(1, 10 ** 12)) -> tuple:
        """Rational enclosures ``((lo_lo, lo_hi), (hi_lo, hi_hi))`` of both endpoints."""
        if self.is_empty:
            raise ValueError("empty interval has no endpoints")
        # 2 A^{3/2} = 2 A sqrt(A); pick the sqrt precision so the error is below eps
        scale = 1
        while Fraction(2 * self.A, scale * self.d) > eps:
            scale *= 10
        s_lo, s_hi = sqrt_bounds(self.A, scale)
        r_lo, r_hi = 2 * self.A * s_lo, 2 * self.A * s_hi
        lower = ((self.u - r_hi) / self.d, (self.u - r_lo) / self.d)
        upper = ((self.u + r_lo) / self.d, (self.u + r_hi) / self.d)
        return lower, upper

    def decimal_endpoints(self, digits: int = 3) -> tuple:
        """Endpoints rounded outward to ``digits`` places (the shown interval covers the true one)."""
        lower, upper = self.endpoint_bounds(Fraction(1, 10 ** (digits + 3)))
        return decimal_floor(lower[0], digits), decimal_ceil(upper[1], digits)

    def approx(self) -> tuple:
        lower, upper = self.endpoint_bounds()
        return float(lower[0]), float(upper[1])


def prescribed_interval(sector: CubicSector, side: str = "low") -> PrescribedInterval:
    """Interval for ``c0`` (``side="low"``) or for ``c3`` (``side="high"``)."""
    if side == "low":
        A, mid, den, adj = sector.B2, sector.c2, sector.c3, sector.c0
    elif side == "high":
        A, mid, den, adj = sector.B1, sector.c1, sector.c0, sector.c3
    else:
        raise ValueError("side must be 'low' or 'high'")
    if den == 0:
        raise NotRegularizedError(
            f"sector {sector.label()} has a zero {'leading' if side == 'low' else 'constant'} coefficient")
    u = mid ** 3 - 3 * mid * A
    return PrescribedInterval(u=u, A=A, d=den * den, side=side, adjacent=adj)


def interval_contains(iv: PrescribedInterval, v) -> bool:
    if iv.A < 0:
        return False
    t = v * iv.d - iv.u
    return t * t <= 4 * iv.A ** 3


def classify_cubic(sector: CubicSector) -> CubicRootClass:
    """Root structure of the sector cubic from ``B2`` and the prescribed interval."""
    if sector.c3 == 0:
        raise DegreeError("not a cubic: leading coefficient is zero")
    iv = prescribed_interval(sector, "low")
    if iv.A < 0:
        return CubicRootClass.ONE_REAL_ONE_COMPLEX_PAIR
    t = sector.c0 * iv.d - iv.u
    gap = t * t - 4 * iv.A ** 3
    if gap > 0:
        return CubicRootClass.ONE_REAL_ONE_COMPLEX_PAIR
    if gap < 0:
        return CubicRootClass.THREE_REAL_DISTINCT
    if iv.A == 0:
        return CubicRootClass.TRIPLE_ROOT
    return CubicRootClass.THREE_REAL_WITH_DOUBLE


@dataclass(frozen=True)
class AdjacentCheck:
    """One membership test: element ``A_element`` against adjacent ``a_adjacent``."""

    element: int
    adjacent: int
    sector: int
    interval: PrescribedInterval
    inside: bool


def classify_elements(bf) -> ElementTable:
    """Mark every positive interior ``A_m`` truly or falsely positive.

    ``A_m`` has adjacent coefficient ``a_{m-2}`` in sector ``m-2`` (when
    ``m >= 2``) and ``a_{m+2}`` in sector ``m-1`` (when ``m <= n-2``). It is
    truly positive iff every adjacent coefficient it has lies in its
    prescribed interval.
    """
    bf = _as_binomial(bf)
    n = bf.degree
    if n < 3:
        raise DegreeError("element classification needs degree >= 3")
    table = quadratic_elements(bf)
    for k, v in enumerate(bf.a):
        if v == 0:
            raise NotRegularizedError(f"a_{k} is zero; regularize first")
    for m in range(1, n):
        if table.quadratic[m] == 0:
            raise NotRegularizedError(f"A_{m} is zero; regularize first")
    sectors = cubic_sectors(bf)
    status = list(table.status)
    checks = []
    for m in range(1, n):
        if table.quadratic[m] < 0:
            continue
        inside_all = True
        if m >= 2:
            iv = prescribed_interval(sectors[m - 2], "low")
            ok = interval_contains(iv, bf.a[m - 2])
            checks.append(AdjacentCheck(m, m - 2, m - 2, iv, ok))
            inside_all &= ok
        if m <= n - 2:
            iv = prescribed_interval(sectors[m - 1], "high")
            ok = interval_contains(iv, bf.a[m + 2])
            checks.append(AdjacentCheck(m, m + 2, m - 1, iv, ok))
            inside_all &= ok
        status[m] = Status.TRULY_POSITIVE if inside_all else Status.FALSELY_POSITIVE
    return table.with_status(status, checks)
