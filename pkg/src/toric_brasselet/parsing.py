"""Polynomial text <-> exact ambient term maps.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := signed ('*'? signed)*
    signed := ('+' | '-')* power
    power  := atom (('^' | '**') integer)?
    atom   := integer ('/' integer)? | variable | '(' expr ')'

Variables are ``z1 .. zn``; ``x, y, z`` alias ``z1, z2, z3`` when n <= 3.
Parameters (``t``, ``s``) are accepted only when a value for them is passed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .errors import NegativeExponent, ParseError, UnknownVariable, ZeroPolynomial

Terms = dict  # exponent tuple -> Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")
_ALIASES = {"x": 1, "y": 2, "z": 3}
PARAMETERS = ("t", "s")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", position=col)
        start = m.start(m.lastindex)
        kind = ("int", "name", "op")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, n: int, params: Mapping[str, Fraction] | None):
        self.text = text
        self.n = n
        self.params = {k: Fraction(v) for k, v in (params or {}).items()}
        self.tokens = _tokenize(text)
        self.i = 0

    # term-map arithmetic
    def _const(self, c) -> Terms:
        return {(0,) * self.n: Fraction(c)} if c else {}

    @staticmethod
    def _add(a: Terms, b: Terms, sign=1) -> Terms:
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + sign * v
        return {k: v for k, v in out.items() if v != 0}

    @staticmethod
    def _mul(a: Terms, b: Terms) -> Terms:
        out: Terms = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + va * vb
        return {k: v for k, v in out.items() if v != 0}

    def _pow(self, a: Terms, e: int) -> Terms:
        out = self._const(1)
        for _ in range(e):
            out = self._mul(out, a)
        return out

    # recursive descent
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        where = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"{msg} near {where}", position=tok[2])

    def parse(self) -> Terms:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        out = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return out

    def expr(self) -> Terms:
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = 1 if self.take()[1] == "+" else -1
            acc = self._add(acc, self.term(), sign)
        return acc

    def _starts_factor(self, tok) -> bool:
        return tok[0] in ("int", "name") or tok[1] == "("

    def term(self) -> Terms:
        acc = self.signed()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = self._mul(acc, self.signed())
            elif self._starts_factor(tok):
                acc = self._mul(acc, self.signed())
            else:
                return acc

    def signed(self) -> Terms:
        sign = 1
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            if self.take()[1] == "-":
                sign = -sign
        value = self.power()
        return value if sign == 1 else {k: -v for k, v in value.items()}

    def power(self) -> Terms:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] in ("^", "**"):
            self.take()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "-":
                raise NegativeExponent("negative exponent", position=tok[2])
            if tok[0] != "int":
                self.error("expected an integer exponent")
            self.take()
            return self._pow(base, int(tok[1]))
        return base

    def atom(self) -> Terms:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            num = Fraction(int(value))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "int":
                    self.error("expected an integer denominator", den)
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", position=den[2])
                num /= int(den[1])
            return self._const(num)
        if kind == "name":
            return self._variable(value, pos)
        if value == "(":
            inner = self.expr()
            close = self.take()
            if close[1] != ")":
                self.error("expected ')'", close)
            return inner
        self.error("unexpected token", tok)

    def _variable(self, name: str, pos: int) -> Terms:
        idx = None
        m = re.fullmatch(r"z(\d+)", name)
        if m:
            idx = int(m.group(1))
        elif name in _ALIASES and self.n <= 3:
            idx = _ALIASES[name]
        elif name in self.params:
            return self._const(self.params[name])
        if idx is None or not 1 <= idx <= self.n:
            hint = " (parameters are only allowed in family deformations)" if name in PARAMETERS else ""
            raise UnknownVariable(f"unknown variable {name!r}{hint}", position=pos)
        exps = [0] * self.n
        exps[idx - 1] = 1
        return {tuple(exps): Fraction(1)}


def parse_terms(text: str, n: int, params: Mapping[str, Fraction] | None = None, allow_zero: bool = True) -> Terms:
    """Parse ``text`` into {exponent tuple: Fraction} over n ambient variables."""
    terms = _Parser(text, n, params).parse()
    if not terms and not allow_zero:
        raise ZeroPolynomial(f"polynomial {text!r} is zero")
    return dict(sorted(terms.items()))


def _graded_lex_key(exps):
    return (-sum(exps), tuple(-e for e in exps))


def format_terms(terms: Mapping[tuple, Fraction]) -> str:
    """Canonical text: graded-lex order on exponents, explicit signs, rationals as num/den."""
    items = sorted(((k, Fraction(v)) for k, v in terms.items() if v != 0), key=lambda kv: _graded_lex_key(kv[0]))
    if not items:
        return "0"
    out = []
    for idx, (exps, c) in enumerate(items):
        mono = "*".join(
            f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" for i, e in enumerate(exps) if e
        )
        mag = abs(c)
        coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if mono:
            body = mono if mag == 1 else f"{coef}*{mono}"
        else:
            body = coef
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def parse_polynomial(text: str, variety, params=None, allow_zero: bool = False):
    """Parse against a ToricVarietyData or SurfaceData, returning a LatticePolynomial."""
    from .newton import LatticePolynomial, ToricVarietyData

    X = variety if isinstance(variety, ToricVarietyData) else variety.variety()
    terms = parse_terms(text, X.n_ambient, params, allow_zero=allow_zero)
    poly = LatticePolynomial.from_ambient(terms, X)
    if poly.is_zero() and not allow_zero:
        # nonzero ambient text can still vanish on X
        raise ZeroPolynomial(f"polynomial {text!r} vanishes on {X.name or 'X'}")
    return poly
