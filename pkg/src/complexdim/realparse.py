"""Recursive-descent parser for exact real expressions.

Grammar (whitespace insignificant; ``-`` and the Unicode minus ``−`` are
interchangeable)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | "sqrt" "(" posint ")" | "(" expr ")" | "-" factor
    rational := integer ("/" posint)?

Unary minus binds tighter than ``*``.  Only rational literals carry ``/``;
there is no division between irrational subexpressions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, DomainError, ExprSyntaxError
from .exactnum import RealElement, render

__all__ = ["parse", "render", "Token", "tokenize"]

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/()−]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if value == "−":
            value = "-"
        tokens.append(Token(kind, value, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text is not None else kind
            raise ExprSyntaxError(f"unexpected {_describe(t)}", t.pos, (want,))
        return self.advance()

    def parse(self) -> RealElement:
        value = self.expr()
        if self.tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {_describe(self.tok)}", self.tok.pos, ("'+'", "'-'", "'*'", "end of input"))
        return value

    def expr(self) -> RealElement:
        value = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RealElement:
        value = self.factor()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> RealElement:
        t = self.tok
        if t.kind == "op" and t.text == "-":
            self.advance()
            return -self.factor()
        if t.kind == "op" and t.text == "(":
            self.advance()
            value = self.expr()
            self.expect("op", ")")
            return value
        if t.kind == "int":
            return RealElement.rational(self.rational())
        if t.kind == "name":
            if t.text != "sqrt":
                raise ExprSyntaxError(f"unknown name {t.text!r}", t.pos, ("'sqrt'",))
            self.advance()
            self.expect("op", "(")
            arg = self.tok
            if arg.kind == "op" and arg.text == "-":
                raise DomainError("sqrt of a negative number", arg.pos)
            self.expect("int")
            n = int(arg.text)
            if n == 0:
                raise DomainError("sqrt(0) is not a valid radicand", arg.pos)
            self.expect("op", ")")
            return RealElement.sqrt(n)
        raise ExprSyntaxError(
            f"unexpected {_describe(t)}", t.pos, ("integer", "'sqrt'", "'('", "'-'")
        )

    def rational(self) -> Fraction:
        num = int(self.advance().text)
        if self.tok.kind == "op" and self.tok.text == "/":
            self.advance()
            t = self.expect("int")
            den = int(t.text)
            if den == 0:
                raise DivisionByZero(position=t.pos)
            return Fraction(num, den)
        return Fraction(num)


def _describe(t: Token) -> str:
    return "end of input" if t.kind == "end" else repr(t.text)


def parse(text: str) -> RealElement:
    """Parse ``text`` into a canonical :class:`RealElement`."""
    return _Parser(text).parse()
