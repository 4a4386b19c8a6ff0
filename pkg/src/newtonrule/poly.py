"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored low-to-high: ``coeffs[k]`` multiplies ``x**k``.
Every value is a :class:`fractions.Fraction`, so all sign decisions made
elsewhere in the package are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .errors import DegreeError, NotRegularizedError, ZeroPolynomialError

__all__ = [
    "Polynomial",
    "BinomialForm",
    "PowerSumTable",
    "Reciprocal",
    "as_fraction",
    "format_rational",
    "parse_rational",
    "from_coeffs",
    "from_roots",
    "to_binomial",
    "derivative",
    "reciprocal",
    "shift",
    "regularize",
    "shift_ladder",
    "evaluate",
    "gcd",
    "square_free_part",
    "square_free_decomposition",
    "power_sums",
    "sum_squared_root_differences",
]


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` / decimal strings exactly.

    Floats are rejected: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("float coefficients are not accepted; pass a Fraction or a string")
    # numbers.Rational (e.g. gmpy2.mpq) and friends
    return Fraction(value.numerator, value.denominator)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "e" in text.lower():
        raise ValueError(f"scientific notation not supported: {text!r}")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"``; the denominator is always written."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class Polynomial:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (0,)):
        c = [as_fraction(v) for v in coeffs]
        if not c:
            raise ValueError("coefficient sequence must be nonempty")
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, c: tuple) -> "Polynomial":
        # c already trimmed and made of Fractions
        obj = cls.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, k: int, value=1) -> "Polynomial":
        return cls([0] * k + [value])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._c) == 1 and self._c[0] == 0

    @property
    def leading(self) -> Fraction:
        return self._c[-1]

    @property
    def constant_term(self) -> Fraction:
        return self._c[0]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        """Render in the parser's grammar (round-trips through ``parse_polynomial``)."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = _fmt_mag(mag, bare=True)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else _fmt_mag(mag, bare=False) + mono
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic ------------------------------------------------------------

    def __neg__(self):
        return Polynomial._raw(tuple(-v for v in self._c))

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self._c), len(other._c))
        return Polynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Polynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, factor) -> "Polynomial":
        factor = as_fraction(factor)
        return Polynomial([v * factor for v in self._c])

    def __truediv__(self, other):
        # division by a constant only; polynomial division is divmod()
        if isinstance(other, Polynomial):
            if other.degree != 0 or other.is_zero:
                raise TypeError("use divmod() for polynomial division")
            other = other[0]
        other = as_fraction(other)
        return self.scale(1 / other)

    def __divmod__(self, other: "Polynomial"):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lead = other.leading
        if self.degree < dq or self.is_zero:
            return Polynomial(), self
        quot = [Fraction(0)] * (self.degree - dq + 1)
        for k in range(self.degree - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j in range(dq + 1):
                    rem[k + j] -= c * other._c[j]
        return Polynomial(quot), Polynomial(rem[:dq] or [0])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def __call__(self, x):
        return evaluate(self, x)

    def derivative(self) -> "Polynomial":
        return derivative(self)

    def shift(self, beta) -> "Polynomial":
        return shift(self, beta)

    def reciprocal(self) -> "Polynomial":
        return reciprocal(self).poly

    def compose_neg(self) -> "Polynomial":
        """p(-x)."""
        return Polynomial._raw(tuple(-v if k % 2 else v for k, v in enumerate(self._c)))

    def to_binomial(self) -> "BinomialForm":
        return to_binomial(self)


def _fmt_mag(mag: Fraction, bare: bool) -> str:
    if mag.denominator == 1:
        return str(mag.numerator)
    s = f"{mag.numerator}/{mag.denominator}"
    return s if bare else f"({s})"


def _coerce(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    return Polynomial((v,))


def from_coeffs(coeffs: Sequence) -> Polynomial:
    """Build a polynomial from low-to-high coefficients, trimming high zeros."""
    if len(coeffs) == 0:
        raise ValueError("coefficient sequence must be nonempty")
    return Polynomial(coeffs)


def from_roots(roots: Iterable, leading=1) -> Polynomial:
    p = Polynomial((leading,))
    for r in roots:
        p = p * Polynomial((-as_fraction(r), 1))
    return p


def _require_nonzero(p: Polynomial, what: str = "operation"):
    if p.is_zero:
        raise ZeroPolynomialError(f"{what} needs a nonzero polynomial")


# binomial form --------------------------------------------------------------


@dataclass(frozen=True)
class BinomialForm:
    """``p(x) = sum C(n,k) a_k x^k``; ``a[k]`` is the simple element ``a_k``."""

    a: tuple

    def __post_init__(self):
        a = tuple(as_fraction(v) for v in self.a)
        if len(a) == 0 or a[-1] == 0:
            raise ZeroPolynomialError("leading simple element must be nonzero")
        object.__setattr__(self, "a", a)

    @property
    def degree(self) -> int:
        return len(self.a) - 1

    def __getitem__(self, k):
        return self.a[k]

    def to_polynomial(self) -> Polynomial:
        n = self.degree
        return Polynomial([comb(n, k) * v for k, v in enumerate(self.a)])

    def quadratic_elements(self) -> tuple:
        """``(A_0, ..., A_n)`` with ``A_0 = a_0**2``, ``A_n = a_n**2``."""
        a = self.a
        n = self.degree
        if n == 0:
            return (a[0] * a[0],)
        inner = [a[m] * a[m] - a[m - 1] * a[m + 1] for m in range(1, n)]
        return (a[0] * a[0], *inner, a[n] * a[n])

    def rosset_e(self, k: int) -> Fraction:
        """Normalized elementary symmetric function ``E_k`` of the roots.

        ``E_k = (-1)**k a_{n-k} / a_n``.
        """
        n = self.degree
        return (-1) ** k * self.a[n - k] / self.a[n]

    def reversed(self) -> "BinomialForm":
        return BinomialForm(tuple(reversed(self.a)))


def to_binomial(p: Polynomial) -> BinomialForm:
    """Exact conversion ``a_k = alpha_k / C(n, k)``."""
    _require_nonzero(p, "to_binomial")
    n = p.degree
    return BinomialForm(tuple(v / comb(n, k) for k, v in enumerate(p.coeffs)))


# calculus and transforms ----------------------------------------------------


def derivative(p: Polynomial) -> Polynomial:
    if p.degree == 0:
        return Polynomial()
    return Polynomial([k * v for k, v in enumerate(p.coeffs)][1:])


def nth_derivative(p: Polynomial, k: int) -> Polynomial:
    for _ in range(k):
        p = derivative(p)
    return p


class Reciprocal(NamedTuple):
    poly: Polynomial
    degree_drop: int  # number of vanishing low coefficients lost in the reversal


def reciprocal(p: Polynomial) -> Reciprocal:
    """``x**n p(1/x)``: the coefficient sequence reversed."""
    _require_nonzero(p, "reciprocal")
    q = Polynomial(tuple(reversed(p.coeffs)))
    return Reciprocal(q, p.degree - q.degree)


def shift(p: Polynomial, beta) -> Polynomial:
    """Taylor shift ``q(x) = p(x + beta)`` by repeated synthetic division."""
    beta = as_fraction(beta)
    if beta == 0 or p.degree == 0:
        return p
    c = list(p.coeffs)
    n = len(c) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            c[j] += beta * c[j + 1]
    return Polynomial._raw(tuple(c))


def evaluate(p: Polynomial, x) -> Fraction:
    """Horner evaluation."""
    x = as_fraction(x)
    acc = Fraction(0)
    for v in reversed(p.coeffs):
        acc = acc * x + v
    return acc


def shift_ladder():
    """1, -1, 1/2, -1/2, 2, -2, 3, -3, ..."""
    yield Fraction(1)
    yield Fraction(-1)
    yield Fraction(1, 2)
    yield Fraction(-1, 2)
    for k in count(2):
        yield Fraction(k)
        yield Fraction(-k)


def is_regular(p: Polynomial) -> bool:
    """All coefficients and all interior quadratic elements are nonzero."""
    if p.is_zero or any(v == 0 for v in p.coeffs):
        return False
    return all(A != 0 for A in to_binomial(p).quadratic_elements()[1:-1])


def regularize(p: Polynomial, max_trials: int | None = None):
    """Return ``(p(x + beta), beta)`` with no zero coefficient or quadratic element.

    ``beta`` is 0 when ``p`` is already regular; otherwise it is the first
    value of :func:`shift_ladder` that works. As functions of ``beta`` the
    coefficients have degree at most ``n`` and never vanish identically, and
    each interior ``A_m`` has degree at most ``2n``, so once more shifts than
    the possible number of bad ones have failed some ``A_m`` must vanish for
    every shift (``A_{n-1}`` does exactly when the roots have zero squared
    spread, as for ``(x + 1)^2`` or ``x^3 - 1``). That case raises
    :class:`NotRegularizedError`.
    """
    _require_nonzero(p, "regularize")
    n = p.degree
    if n < 1:
        raise DegreeError("regularize needs degree >= 1")
    if is_regular(p):
        return p, Fraction(0)
    if max_trials is None:
        max_trials = n * (n + 1) + 2 * n * max(n - 1, 0) + 1
    for trial, beta in enumerate(shift_ladder()):
        if trial >= max_trials:
            break
        q = shift(p, beta)
        if is_regular(q):
            return q, beta
    raise NotRegularizedError(
        "no shift makes every quadratic element nonzero: some A_m vanishes identically in the shift")


# gcd and square-free parts --------------------------------------------------


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor (Euclid over the rationals)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def square_free_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')``, made monic."""
    _require_nonzero(p, "square_free_part")
    if p.degree == 0:
        return Polynomial((1,))
    g = gcd(p, derivative(p))
    return (p // g).monic()


def square_free_decomposition(p: Polynomial) -> list:
    """Yun's algorithm: ``[(f_1, 1), (f_2, 2), ...]`` with ``p ~ prod f_k**k``.

    Each ``f_k`` is monic, square-free and pairwise coprime with the others;
    constant factors are dropped.
    """
    _require_nonzero(p, "square_free_decomposition")
    out = []
    if p.degree == 0:
        return out
    dp = derivative(p)
    a = gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - derivative(b)
    k = 1
    while b.degree > 0:
        g = gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - derivative(b)
        k += 1
    return out


# power sums -----------------------------------------------------------------


@dataclass(frozen=True)
class PowerSumTable:
    """``p[j]`` is the sum of the j-th powers of all roots (with multiplicity)."""

    p: tuple

    def __getitem__(self, j):
        return self.p[j]

    def __len__(self):
        return len(self.p)


def power_sums(p: Polynomial, J: int) -> PowerSumTable:
    """Newton's identities up to ``p_J``."""
    _require_nonzero(p, "power_sums")
    n = p.degree
    lead = p.leading
    # monic x^n + b_1 x^(n-1) + ... + b_n
    b = [Fraction(1)] + [p[n - k] / lead for k in range(1, n + 1)]
    s = [Fraction(n)]
    for k in range(1, J + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            acc += b[i] * s[k - i]
        if k <= n:
            acc += k * b[k]
        s.append(-acc)
    return PowerSumTable(tuple(s))


def sum_squared_root_differences(p: Polynomial) -> Fraction:
    """``sum_{i>j} (r_i - r_j)**2 = n p_2 - p_1**2``; no roots are computed."""
    _require_nonzero(p, "sum_squared_root_differences")
    if p.degree < 2:
        raise DegreeError("need degree >= 2")
    s = power_sums(p, 2)
    return p.degree * s[2] - s[1] ** 2
