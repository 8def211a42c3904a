"""Recursive-descent parser for polynomial and ideal expressions.

Grammar (whitespace ignored)::

    ideal   := 'ideal' '(' [expr (',' expr)*] ')' | expr
    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('+' | '-') unary | power
    power   := atom ['^' INT]
    atom    := INT | IDENT | '(' expr ')'
"""

from __future__ import annotations

import re

from .errors import ParseError
from .polynomial import Polynomial
from .ring import RingContext

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^(),":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while self.peek()[0] == "*":
            self.take()
            f = f * self.unary()
        return f

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError("exponent must be a non-negative integer literal", self.text, tok[2])
            self.take()
            base = base ** int(tok[1])
            if self.peek()[0] == "^":
                raise ParseError("chained exponents need parentheses", self.text, self.peek()[2])
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.constant(self.ring, int(val))
        if kind == "ident":
            if val not in self.ring.variables:
                raise ParseError(f"unknown variable {val!r}", self.text, pos)
            self.take()
            return Polynomial.variable(self.ring, val)
        if kind == "(":
            self.take()
            f = self.expr()
            self.take(")")
            return f
        raise ParseError("expected a number, variable or '('", self.text, pos)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    parser = _Parser(text, ring)
    f = parser.expr()
    parser.take("end")
    return f


def parse_ideal_generators(text: str, ring: RingContext) -> list[Polynomial]:
    """Generators of ``ideal(p1, ..., pk)``; a bare polynomial means its principal ideal."""
    parser = _Parser(text, ring)
    kind, val, _ = parser.peek()
    if kind == "ident" and val == "ideal" and "ideal" not in ring.variables:
        parser.take()
        parser.take("(")
        gens = []
        if parser.peek()[0] != ")":
            gens.append(parser.expr())
            while parser.peek()[0] == ",":
                parser.take()
                gens.append(parser.expr())
        parser.take(")")
        parser.take("end")
        return gens
    f = parser.expr()
    parser.take("end")
    return [f]
