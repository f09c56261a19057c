"""Recursive-descent parser for the expression grammar.

Accepted syntax::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := NUMBER | IDENT | '(' expr ')'
    NUMBER := INT ('/' INT)?

Multiplication is always explicit (``2*x``, never ``2x``), exponents are
positive integer literals, and the only division allowed is inside a
rational literal such as ``3/2``.  Every syntax error carries the 0-based
offset where parsing failed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import ExprSyntaxError, UnknownVariable
from .poly import Polynomial, VarContext


class Token(NamedTuple):
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    pos: int


_OPS = set("+-*^/()")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(Token("op", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], ctx: VarContext):
        self.tokens = tokens
        self.ctx = ctx
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ExprSyntaxError(f"expected '{text}'", tok.pos)
        return self.advance()

    def parse(self) -> Polynomial:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            hint = "; multiplication must be written with '*'" if tok.kind in (
                "ident",
                "int",
            ) else ""
            raise ExprSyntaxError(f"unexpected {tok.text!r}{hint}", tok.pos)
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return -self.factor()
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp = self.peek()
            if exp.kind != "int" or int(exp.text) < 1:
                raise ExprSyntaxError("'^' expects a positive integer exponent", exp.pos)
            self.advance()
            value = value ** int(exp.text)
        return value

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.advance()
                den = self.peek()
                if den.kind != "int" or int(den.text) < 1:
                    raise ExprSyntaxError(
                        "denominator must be a positive integer", den.pos
                    )
                self.advance()
                return Polynomial.const(self.ctx, Fraction(num, int(den.text)))
            return Polynomial.const(self.ctx, num)
        if tok.kind == "ident":
            self.advance()
            if not self.ctx.has(tok.text):
                raise UnknownVariable(tok.text, tok.pos)
            return Polynomial.variable(self.ctx, tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        shown = tok.text if tok.kind != "end" else "end of input"
        raise ExprSyntaxError(f"unexpected {shown!r}", tok.pos)


def parse_polynomial(text: str, ctx: VarContext) -> Polynomial:
    """Parse an expression against a fixed variable context."""
    return _Parser(tokenize(text), ctx).parse()


def parse_function(text: str, role: str = "source") -> Polynomial:
    """Parse an expression, inferring the context from the identifiers used.

    Variables are ordered alphabetically, all with the given role.  Meant
    for one-off function germs such as augmenting functions.
    """
    names = sorted({t.text for t in tokenize(text) if t.kind == "ident"})
    ctx = VarContext.of(names, role)
    return parse_polynomial(text, ctx)
