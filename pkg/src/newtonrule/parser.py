"""Parser for human-written univariate polynomial expressions.

Grammar (whitespace-insensitive)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*' | '/' | <juxtaposition>) factor)*
    factor  := ('+'|'-') factor | power
    power   := primary [('^' | '**') INT]
    primary := NUMBER | NAME | '(' expr ')'

``NUMBER`` is an integer or a finite decimal (``0.1`` is read as ``1/10``);
``a/b`` gives rationals. Scientific notation is rejected. Juxtaposition
(``28x^2``, ``8(3-2q)x``) multiplies. The divisor of ``/`` must be a nonzero
constant. The first letter met names the variable; a second, different
letter is an error unless it is the declared parameter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .poly import Polynomial, as_fraction

__all__ = [
    "ParseDiagnostic",
    "ParametricPolynomial",
    "parse_polynomial",
    "parse_parametric",
    "GRAMMAR_HELP",
]

GRAMMAR_HELP = """\
Polynomial expressions: sums of terms like 3x^2, -x, (28/5)x^3, 0.1x, 7.
  coefficients: integers, a/b rationals, finite decimals (exact; 0.1 = 1/10)
  powers:       x^k or x**k with k a nonnegative integer
  products:     2*x, 2x, 8*(3-2q)x, (x-1)(x+2)
  parametric:   coefficients may be polynomials (degree <= 3) in one
                parameter, e.g. "x^3 - 8x^2 + 8*(3-2q)x - 16*(1-q)"
Scientific notation (1e-3) is not accepted."""


@dataclass(frozen=True)
class ParseDiagnostic:
    position: int
    message: str
    severity: str = "error"


# internal bivariate representation: {(x_power, param_power): Fraction}


def _badd(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _bmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + u * v
    return {k: v for k, v in out.items() if v != 0}


def _is_const(a: dict) -> bool:
    return all(k == (0, 0) for k in a)


_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)")
_SCI = re.compile(r"[eE][+-]?\d")


class _Parser:
    def __init__(self, text: str, param: str | None):
        self.text = text
        self.param = param
        self.var: str | None = None
        self.tokens = self._tokenize()
        self.i = 0

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.peek()[2] if self.i < len(self.tokens) else len(self.text)
        raise ParseError(msg, min(pos, len(self.text)), self.text)

    def _tokenize(self):
        text, param = self.text, self.param
        toks = []
        pos = 0
        while pos < len(text):
            ch = text[pos]
            if ch.isspace():
                pos += 1
                continue
            m = _NUMBER.match(text, pos)
            if m:
                end = m.end()
                if _SCI.match(text, end):
                    raise ParseError("scientific notation is not supported", pos, text)
                toks.append(("num", Fraction(m.group(0)), pos))
                pos = end
                continue
            if ch.isalpha():
                if param and text.startswith(param, pos):
                    toks.append(("name", param, pos))
                    pos += len(param)
                else:
                    toks.append(("name", ch, pos))
                    pos += 1
                continue
            if text.startswith("**", pos):
                toks.append(("op", "^", pos))
                pos += 2
                continue
            if ch in "+-*/^()":
                toks.append(("op", ch, pos))
                pos += 1
                continue
            raise ParseError(f"unknown token {ch!r}", pos, text)
        return toks

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def accept(self, op):
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def parse(self) -> dict:
        if not self.tokens:
            raise ParseError("empty input", 0, self.text)
        out = self.expr()
        if self.i < len(self.tokens):
            self.error(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self) -> dict:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        acc = self.term()
        if sign < 0:
            acc = {k: -v for k, v in acc.items()}
        while True:
            if self.accept("+"):
                acc = _badd(acc, self.term())
            elif self.accept("-"):
                acc = _badd(acc, self.term(), -1)
            else:
                return acc

    def term(self) -> dict:
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.i += 1
                acc = _bmul(acc, self.factor())
            elif kind == "op" and val == "/":
                self.i += 1
                dpos = self.peek()[2]
                d = self.factor()
                if not _is_const(d):
                    self.error("division by a non-constant expression is unsupported", dpos)
                dv = d.get((0, 0), Fraction(0))
                if dv == 0:
                    self.error("division by zero in coefficient", dpos)
                acc = {k: v / dv for k, v in acc.items()}
            elif kind == "name" or (kind == "op" and val == "("):
                acc = _bmul(acc, self.factor())
            elif kind == "num":
                self.error("missing operator between terms", pos)
            else:
                return acc

    def factor(self) -> dict:
        if self.accept("-"):
            return {k: -v for k, v in self.factor().items()}
        if self.accept("+"):
            return self.factor()
        return self.power()

    def power(self) -> dict:
        base = self.primary()
        if self.accept("^"):
            kind, val, pos = self.take()
            if kind == "op" and val == "+":
                kind, val, pos = self.take()
            if kind != "num" or "." in _NUMBER.match(self.text, pos).group(0):
                self.error("power must be a nonnegative integer", pos)
            k = int(val)
            out = {(0, 0): Fraction(1)}
            for _ in range(k):
                out = _bmul(out, base)
            return out
        return base

    def primary(self) -> dict:
        kind, val, pos = self.take()
        if kind == "num":
            return {(0, 0): val} if val != 0 else {}
        if kind == "name":
            if self.param is not None and val == self.param:
                return {(0, 1): Fraction(1)}
            if self.var is None:
                self.var = val
            elif val != self.var:
                self.error(f"mixed variables {self.var!r} and {val!r}", pos)
            return {(1, 0): Fraction(1)}
        if kind == "op" and val == "(":
            inner = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return inner
        if kind == "end":
            self.error("unexpected end of input", pos)
        self.error(f"unexpected {val!r}", pos)


def parse_polynomial(text: str) -> Polynomial:
    """Parse an expression in one variable into a :class:`Polynomial`.

    Raises :class:`~newtonrule.errors.ParseError` (with ``.diagnostic``)
    on malformed input.
    """
    p = _Parser(text, None)
    terms = p.parse()
    n = max((i for i, _ in terms), default=0)
    coeffs = [Fraction(0)] * (n + 1)
    for (i, _), v in terms.items():
        coeffs[i] = v
    return Polynomial(coeffs)


@dataclass(frozen=True)
class ParametricPolynomial:
    """Polynomial in ``var`` whose coefficients are polynomials in ``param``.

    ``coeffs[k]`` is the coefficient of ``var**k`` as a :class:`Polynomial`
    in the parameter.
    """

    coeffs: tuple
    param: str
    var: str = "x"

    def instantiate(self, value) -> Polynomial:
        value = as_fraction(value)
        return Polynomial([c(value) for c in self.coeffs])

    __call__ = instantiate

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_text(self) -> str:
        out = ""
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            if c.degree == 0:
                term = Polynomial.monomial(k, c.constant_term).to_text(self.var)
            else:
                mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
                term = f"({c.to_text(self.param)}){mono}"
            if not out:
                out = term
            elif term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out or "0"

    def __str__(self):
        return self.to_text()


def parse_parametric(text: str, param: str, max_param_degree: int = 3) -> ParametricPolynomial:
    """Parse an expression whose coefficients may involve ``param``."""
    if not param or not param.isalpha():
        raise ValueError("parameter name must be alphabetic")
    p = _Parser(text, param)
    terms = p.parse()
    pdeg = max((j for _, j in terms), default=0)
    if pdeg > max_param_degree:
        raise ParseError(
            f"coefficients have degree {pdeg} in {param!r}; at most {max_param_degree} supported",
            text.find(param), text)
    n = max((i for i, _ in terms), default=0)
    rows = [[Fraction(0)] * (pdeg + 1) for _ in range(n + 1)]
    for (i, j), v in terms.items():
        rows[i][j] = v
    return ParametricPolynomial(tuple(Polynomial(r) for r in rows), param, p.var or "x")
