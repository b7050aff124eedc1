"""Recursive-descent parser for polynomial and point expressions.

Grammar (whitespace insignificant between tokens):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := rational | radical | basis | 'x' | '(' expr ')' | '-' atom

Rationals are written `p/q` or plain integers with no internal spaces.  The
radical token `s<d>` names sqrt(d) and must match the ambient field.  Basis
symbols are i, j, k over quaternions and additionally l, il, jl, kl over
octonions; k always means i*j.  Products keep their written order, and the
result is normalized to left-coefficient form (the variable is central, so
this always succeeds).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .octonions import OctSpec
from .polynomials import AlgebraSpec, Element, Poly
from .quaternions import QuatSpec
from .scalars import FieldSpec, Scalar

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[a-z]+\d*)|(?P<op>[-+*^()]))"
)
_RADICAL_RE = re.compile(r"^s(\d+)$")


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | "op" | "end"
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            at = len(source) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        for kind in ("number", "name", "op"):
            text = m.group(kind)
            if text is not None:
                tokens.append(_Token(kind, text, m.start(kind)))
                break
        pos = m.end()
    tokens.append(_Token("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str, spec: AlgebraSpec) -> None:
        self.spec = spec
        self.tokens = _tokenize(source)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        if tok.kind != "end":
            self.index += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.advance()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)

    # expr := term (('+'|'-') term)*
    def expr(self) -> Poly:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    # term := factor ('*' factor)*
    def term(self) -> Poly:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    # factor := atom ('^' uint)?
    def factor(self) -> Poly:
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp = self.advance()
            if exp.kind != "number" or "/" in exp.text:
                raise ParseError("exponent must be a nonnegative integer", exp.pos)
            value = value ** int(exp.text)
        return value

    # atom := rational | radical | basis | 'x' | '(' expr ')' | '-' atom
    def atom(self) -> Poly:
        tok = self.advance()
        if tok.kind == "number":
            if "/" in tok.text:
                p, q = tok.text.split("/")
                if int(q) == 0:
                    raise ParseError("zero denominator", tok.pos)
                return Poly.constant(self.spec, Fraction(int(p), int(q)))
            return Poly.constant(self.spec, int(tok.text))
        if tok.kind == "name":
            return self._named(tok)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok.kind == "op" and tok.text == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos)

    def _named(self, tok: _Token) -> Poly:
        if tok.text == "x":
            return Poly.x(self.spec)
        radical = _RADICAL_RE.match(tok.text)
        if radical:
            d = int(radical.group(1))
            field = self.spec.field
            if field.is_rational or field.d != d:
                raise ParseError(
                    f"radical token s{d} does not belong to the field {field}",
                    tok.pos,
                )
            return Poly.constant(self.spec, field.sqrt_gen())
        try:
            return Poly.constant(self.spec, self.spec.basis_element(tok.text))
        except KeyError:
            kind = "octonion" if isinstance(self.spec, OctSpec) else "quaternion"
            raise ParseError(
                f"unknown symbol {tok.text!r} in a {kind} algebra", tok.pos
            ) from None

    def parse(self) -> Poly:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return value


def parse_poly(source: str, spec: AlgebraSpec) -> Poly:
    """Parse an expression into a polynomial in left-coefficient form."""
    return _Parser(source, spec).parse()


def parse_element(source: str, spec: AlgebraSpec) -> Element:
    """Parse a degree-0 expression into an algebra element."""
    p = parse_poly(source, spec)
    if p.degree > 0:
        raise ParseError(f"expected a point, got a degree-{p.degree} polynomial")
    return p.coeff(0)


def parse_scalar(source: str, field: FieldSpec) -> Scalar:
    """Parse a central expression into a ground-field scalar."""
    element = parse_element(source, QuatSpec.standard(field))
    if not element.is_central:
        raise ParseError("expected a scalar, got a non-central element")
    return element.scalar_part()
