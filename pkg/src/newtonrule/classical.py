"""Exact reference methods: Descartes, Budan-Fourier, Sturm, resultants.

Sturm counts use the half-open convention ``(q, r]``; ``None`` or
``math.inf`` / ``-math.inf`` stand for the infinite endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cubic import decimal_ceil, decimal_floor, decimal_nearest
from .errors import DegreeError, ZeroPolynomialError
from .poly import (
    Polynomial,
    as_fraction,
    derivative,
    evaluate,
    square_free_decomposition,
    square_free_part,
)
from .sectors import Sign, sign_of

__all__ = [
    "SturmChain",
    "IsolatingInterval",
    "DiscriminantVerdict",
    "PrivilegedTerm",
    "sign_variations",
    "descartes_positive",
    "descartes_negative",
    "fourier_signs",
    "fourier_bound",
    "sturm_chain",
    "sturm_count",
    "count_real_roots",
    "root_bound",
    "isolate_real_roots",
    "sylvester_matrix",
    "bareiss_determinant",
    "resultant",
    "discriminant",
    "resultant_discriminant",
    "discriminant_interpretation",
    "privileged_free_terms",
    "interval_range",
    "format_enclosure",
    "simplest_between",
    "exact_root_in",
]


def sign_variations(values) -> int:
    """Sign changes in a sequence, skipping zeros."""
    count = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _nonzero(p: Polynomial):
    if p.is_zero:
        raise ZeroPolynomialError("zero polynomial has no root count")


def descartes_positive(p: Polynomial) -> int:
    _nonzero(p)
    return sign_variations(p.coeffs)


def descartes_negative(p: Polynomial) -> int:
    _nonzero(p)
    return sign_variations(p.compose_neg().coeffs)


# Budan-Fourier ---------------------------------------------------------------


def _derivative_sequence(p: Polynomial) -> list:
    seq = [p]
    for _ in range(p.degree):
        seq.append(derivative(seq[-1]))
    return seq


def fourier_signs(p: Polynomial, x) -> tuple:
    """Signs of ``p, p', ..., p^(n)`` at ``x``."""
    x = as_fraction(x)
    return tuple(sign_of(evaluate(d, x)) for d in _derivative_sequence(p))


def fourier_bound(p: Polynomial, q, r) -> int:
    """Variations lost from ``S(q)`` to ``S(r)``: an upper bound for roots in ``(q, r]``."""
    q, r = as_fraction(q), as_fraction(r)
    if q >= r:
        raise ValueError("need q < r")
    _nonzero(p)
    return sign_variations(fourier_signs(p, q)) - sign_variations(fourier_signs(p, r))


# Sturm -----------------------------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    chain: tuple

    def __len__(self):
        return len(self.chain)

    def __getitem__(self, i):
        return self.chain[i]

    def signs_at(self, x) -> tuple:
        if x is None or (isinstance(x, float) and math.isinf(x)):
            raise ValueError("use signs_at_infinity for infinite points")
        x = as_fraction(x)
        return tuple(sign_of(evaluate(f, x)) for f in self.chain)

    def signs_at_infinity(self, positive: bool = True) -> tuple:
        out = []
        for f in self.chain:
            s = sign_of(f.leading)
            if not positive and f.degree % 2:
                s = Sign(-int(s))
            out.append(s)
        return tuple(out)

    def variations(self, x) -> int:
        if x is None:
            raise ValueError("ambiguous infinite endpoint")
        if isinstance(x, float) and math.isinf(x):
            return sign_variations(self.signs_at_infinity(x > 0))
        return sign_variations(self.signs_at(x))


def sturm_chain(p: Polynomial, square_free: bool = True) -> SturmChain:
    """``p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k)`` until the remainder vanishes.

    With ``square_free`` (the default) ``p`` is first replaced by its
    square-free part so the chain counts distinct roots.
    """
    _nonzero(p)
    if square_free and p.degree > 0:
        p = square_free_part(p)
    chain = [p]
    if p.degree == 0:
        return SturmChain(tuple(chain))
    chain.append(derivative(p))
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            break
        chain.append(-r)
    return SturmChain(tuple(chain))


def _endpoint(x, default):
    if x is None:
        return default
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError("float endpoints are not exact; pass a Fraction")
    return as_fraction(x)


def sturm_count(p: Polynomial, q=None, r=None, chain: SturmChain | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(q, r]``."""
    q = _endpoint(q, -math.inf)
    r = _endpoint(r, math.inf)
    if not q < r:
        raise ValueError("need q < r")
    if chain is None:
        chain = sturm_chain(p)
    return chain.variations(q) - chain.variations(r)


def count_real_roots(p: Polynomial, q=None, r=None, multiplicity: bool = True) -> int:
    """Real roots in ``(q, r]``, counted with multiplicity by default."""
    _nonzero(p)
    if not multiplicity:
        return sturm_count(p, q, r)
    return sum(k * sturm_count(f, q, r) for f, k in square_free_decomposition(p))


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound ``1 + max |alpha_i / alpha_n|``: every root has smaller modulus."""
    _nonzero(p)
    lead = abs(p.leading)
    if p.degree == 0:
        return Fraction(1)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open ``(lo, hi]`` holding exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __contains__(self, x) -> bool:
        return self.lo < x <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)


def _bisect_isolate(chain: SturmChain, lo, hi, width, out):
    stack = [(lo, hi, chain.variations(lo), chain.variations(hi))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1 and hi - lo < width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = chain.variations(mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))


def isolate_real_roots(p: Polynomial, width=Fraction(1, 1000)) -> list:
    """Disjoint intervals, one per distinct real root, each narrower than ``width``.

    Multiplicities come from the square-free decomposition. Deterministic
    midpoint bisection from the Cauchy bound.
    """
    _nonzero(p)
    width = as_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if p.degree == 0:
        return []
    factors = square_free_decomposition(p)
    sqf = Polynomial((1,))
    for f, _ in factors:
        sqf = sqf * f
    chain = sturm_chain(sqf, square_free=False)
    B = root_bound(sqf)
    raw: list = []
    _bisect_isolate(chain, -B, B, width, raw)
    raw.sort()
    out = []
    for lo, hi in raw:
        mult = 1
        for f, k in factors:
            if f.degree > 0 and sturm_count(f, lo, hi) > 0:
                mult = k
                break
        out.append(IsolatingInterval(lo, hi, mult))
    return out


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in the closed interval ``[lo, hi]``."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo > hi:
        raise ValueError("need lo <= hi")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl < math.floor(hi):
        return Fraction(fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def exact_root_in(p: Polynomial, lo: Fraction, hi: Fraction):
    """The simplest rational in ``(lo, hi]`` if it is a root of ``p``, else ``None``."""
    s = simplest_between(lo, hi)
    return s if s != lo and evaluate(p, s) == 0 else None


def refine_root(chain: SturmChain, lo: Fraction, hi: Fraction, width: Fraction) -> tuple:
    """Shrink ``(lo, hi]`` (holding one root of the chain's polynomial) below ``width``."""
    vlo = chain.variations(lo)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        vmid = chain.variations(mid)
        if vlo - vmid > 0:
            hi = mid
        else:
            lo, vlo = mid, vmid
    return lo, hi


# resultants and discriminants ------------------------------------------------


def sylvester_matrix(A: Polynomial, B: Polynomial) -> list:
    """``(n+m)``-square matrix: ``m`` shifted rows of A's coefficients, then ``n`` of B's.

    Coefficients run from the leading one down, as ``S[i][j] = alpha_{n+i-j}``.
    """
    n, m = A.degree, B.degree
    size = n + m
    a = list(reversed(A.coeffs))
    b = list(reversed(B.coeffs))
    rows = []
    for i in range(m):
        row = [Fraction(0)] * size
        row[i:i + n + 1] = a
        rows.append(row)
    for i in range(n):
        row = [Fraction(0)] * size
        row[i:i + m + 1] = b
        rows.append(row)
    return rows


def bareiss_determinant(matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational rows are scaled to integers first, so every intermediate value
    is an exact integer.
    """
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    M = []
    denom = 1
    for row in matrix:
        row = [as_fraction(v) for v in row]
        L = lcm(*(v.denominator for v in row))
        denom *= L
        M.append([int(v * L) for v in row])
    sign = 1
    prev = 1
    for k in range(size - 1):
        if M[k][k] == 0:
            for i in range(k + 1, size):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = M[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return Fraction(sign * M[-1][-1], denom)


def resultant(A: Polynomial, B: Polynomial) -> Fraction:
    """Sylvester resultant. With this row layout ``Res(x - a, x - b) = a - b``."""
    if A.is_zero or B.is_zero:
        raise ZeroPolynomialError("resultant needs nonzero polynomials")
    return bareiss_determinant(sylvester_matrix(A, B))


def discriminant(p: Polynomial) -> Fraction:
    """``(-1)^{n(n-1)/2} Res(p, p') / alpha_n`` (equals ``b^2 - 4ac`` for quadratics)."""
    _nonzero(p)
    n = p.degree
    if n < 2:
        raise DegreeError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, derivative(p)) / p.leading


def resultant_discriminant(p: Polynomial) -> Fraction:
    """``Res(p, p') / alpha_n`` without the ``(-1)^{n(n-1)/2}`` sign.

    Some classical tables quote quadratic "discriminants" in this
    normalization (``4ac - b^2``).
    """
    _nonzero(p)
    if p.degree < 2:
        raise DegreeError("need degree >= 2")
    return resultant(p, derivative(p)) / p.leading


@dataclass(frozen=True)
class DiscriminantVerdict:
    sign: int
    complex_root_counts: tuple  # admissible numbers of non-real roots
    repeated_root: bool

    @property
    def complex_pair_counts(self) -> tuple:
        return tuple(c // 2 for c in self.complex_root_counts)


def discriminant_interpretation(delta, n: int) -> DiscriminantVerdict:
    """Constraint on the number of non-real roots implied by the sign of the discriminant.

    Positive: a multiple of 4; negative: 2 mod 4; zero: a repeated root, any
    even count.
    """
    delta = as_fraction(delta)
    if n < 2:
        raise DegreeError("need degree >= 2")
    s = sign_of(delta)
    if s > 0:
        counts = tuple(range(0, n + 1, 4))
    elif s < 0:
        counts = tuple(range(2, n + 1, 4))
    else:
        counts = tuple(range(0, n + 1, 2))
    return DiscriminantVerdict(int(s), counts, s == 0)


# polynomial bands ------------------------------------------------------------


def interval_range(p: Polynomial, lo: Fraction, hi: Fraction) -> tuple:
    """Enclosure of ``{p(x) : lo <= x <= hi}`` by interval Horner evaluation."""
    rlo = rhi = Fraction(0)
    for c in reversed(p.coeffs):
        prods = (rlo * lo, rlo * hi, rhi * lo, rhi * hi)
        rlo, rhi = min(prods) + c, max(prods) + c
    return rlo, rhi


@dataclass(frozen=True)
class PrivilegedTerm:
    """Free term of ``p(x) - p(mu)`` for a stationary point ``mu``.

    ``lo <= value <= hi`` is a certified enclosure; ``stationary`` isolates ``mu``.
    """

    lo: Fraction
    hi: Fraction
    stationary: IsolatingInterval

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def decimal(self, digits: int = 3) -> str:
        return format_enclosure(self.lo, self.hi, digits)


def format_enclosure(lo: Fraction, hi: Fraction, digits: int = 3) -> str:
    """Decimal display of a certified enclosure ``lo <= v <= hi``.

    ``=`` marks a value that is exact at ``digits`` places. ``≈`` marks a
    rounded one: when both ends round to the same decimal that decimal is
    certified and shown, otherwise the bracket is rounded outward.
    """
    lo, hi = as_fraction(lo), as_fraction(hi)
    a, b = decimal_nearest(lo, digits), decimal_nearest(hi, digits)
    if lo == hi:
        return f"={a}" if Fraction(a) == lo else f"≈{a}"
    if a == b:
        return f"≈{a}"
    return f"≈[{decimal_floor(lo, digits)}, {decimal_ceil(hi, digits)}]"


def privileged_free_terms(p: Polynomial, digits: int = 3) -> list:
    """Free terms ``alpha_0 - p(mu_i)`` of the privileged members of ``p``'s free-term family.

    One entry per distinct real stationary point ``mu_i``, sorted descending.
    Enclosures are refined until they are narrower than ``10**-(digits+2)``.
    Empty when ``p'`` has no real roots.
    """
    _nonzero(p)
    if p.degree < 2:
        raise DegreeError("need degree >= 2")
    dp = square_free_part(derivative(p))
    chain = sturm_chain(dp, square_free=False)
    target = Fraction(1, 10 ** (digits + 2))
    a0 = p.constant_term
    out = []
    for iv in isolate_real_roots(dp, Fraction(1, 8)):
        lo, hi = iv.lo, iv.hi
        mu = exact_root_in(dp, lo, hi)
        if mu is not None:
            v = a0 - evaluate(p, mu)
            out.append(PrivilegedTerm(v, v, IsolatingInterval(lo, hi, iv.multiplicity)))
            continue
        width = hi - lo
        while True:
            rlo, rhi = interval_range(p, lo, hi)
            if rhi - rlo <= target:
                break
            width /= 2
            lo, hi = refine_root(chain, lo, hi, width)
            if evaluate(dp, hi) == 0:
                rlo = rhi = evaluate(p, hi)
                break
        out.append(PrivilegedTerm(a0 - rhi, a0 - rlo, IsolatingInterval(lo, hi, iv.multiplicity)))
    out.sort(key=lambda t: t.midpoint, reverse=True)
    return out
