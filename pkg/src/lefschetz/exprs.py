"""A small infix grammar for scalar expressions.

Variables match ``[a-z][a-z0-9_]*``; literals are integers; operators are
``+ - * / ^`` with standard precedence (``^`` binds tightest and is
right-associative, unary minus sits between ``*`` and ``^``).  Parsing
produces a RationalFunction; serialization produces a string that re-parses
to an equal value.
"""

from __future__ import annotations

import re

from .scalars import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9_]*)|([+\-*/^()]))")


class ExprError(ValueError):
    """Malformed scalar expression."""


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            raise ExprError(f"unexpected character at position {pos}: {text[pos:]!r}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ExprError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse_sum(self) -> RationalFunction:
        value = self.parse_product()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_product(self) -> RationalFunction:
        value = self.parse_unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ExprError("division by zero in expression")
                value = value / rhs
        return value

    def parse_unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.take()
            return -self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> RationalFunction:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            negative = False
            if self.peek() == "-":
                self.take()
                negative = True
            tok = self.take()
            if not tok.isdigit():
                raise ExprError(f"exponent must be an integer, got {tok!r}")
            exp = -int(tok) if negative else int(tok)
            if exp < 0 and base.is_zero():
                raise ExprError("negative power of zero")
            return base**exp
        return base

    def parse_atom(self) -> RationalFunction:
        tok = self.take()
        if tok == "(":
            value = self.parse_sum()
            if self.take() != ")":
                raise ExprError("missing closing parenthesis")
            return value
        if tok.isdigit():
            return RationalFunction.const(int(tok))
        if re.fullmatch(r"[a-z][a-z0-9_]*", tok):
            return RationalFunction.variable(tok)
        raise ExprError(f"unexpected token {tok!r}")


def parse_scalar(text: str) -> RationalFunction:
    parser = _Parser(_tokenize(text))
    value = parser.parse_sum()
    if parser.peek() is not None:
        raise ExprError(f"trailing input: {' '.join(parser.tokens[parser.pos:])}")
    return value


def _format_poly(poly) -> str:
    if not poly.terms:
        return "0"
    bits = []
    for e in sorted(poly.terms, reverse=True):
        c = poly.terms[e]
        factors = []
        for v, x in zip(poly.vars, e):
            if x == 1:
                factors.append(v)
            elif x:
                factors.append(f"{v}^{x}")
        coeff = None
        if c.denominator != 1:
            coeff = f"{c.numerator}/{c.denominator}" if c.numerator >= 0 else f"-{-c.numerator}/{c.denominator}"
        elif abs(c) != 1 or not factors:
            coeff = str(c)
        elif c == -1:
            coeff = "-"
        body = "*".join(factors)
        if coeff is None:
            text = body
        elif coeff == "-":
            text = f"-{body}"
        elif body:
            text = f"{coeff}*{body}"
        else:
            text = coeff
        bits.append(text)
    out = bits[0]
    for b in bits[1:]:
        out += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
    return out


def format_scalar(value: RationalFunction) -> str:
    """Serialize to the infix grammar; round-trips through parse_scalar."""
    value = RationalFunction._coerce(value)
    num = _format_poly(value.num)
    if value.den == 1:
        return num
    den = _format_poly(value.den)
    return f"({num})/({den})"
