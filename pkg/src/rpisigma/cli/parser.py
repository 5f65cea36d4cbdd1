"""Recursive-descent parser for the expression DSL.

Grammar (an optional leading minus on expressions is accepted so that inputs
like -y/(x+1) read naturally):

    expr   := '-'? term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' signed-integer)?
    base   := integer | identifier | '(' expr ')'

Identifiers resolve to tower generators, plus the reserved names `x` and
`zeta` (a primitive root of the constant field).  Division requires the
divisor to be a nonzero base-field element or a unit of the tower.
"""

from __future__ import annotations

from ..errors import NonUnitDivisor, ParseError, UnknownIdentifier


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tower, text):
        self.tower = tower
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.pos)
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.kind!r}", tok.pos)
        return value

    def expr(self):
        negate = False
        if self.peek().kind == "-":
            self.next()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.next()
            rhs = self.factor()
            if op.kind == "*":
                value = value * rhs
            else:
                value = value * self._invert(rhs, op.pos)
        return value

    def _invert(self, divisor, pos):
        if not divisor:
            raise NonUnitDivisor("division by zero")
        if divisor.is_ratfun():
            return self.tower.from_ratfun(divisor.to_ratfun().inverse())
        if divisor.is_unit():
            return divisor.invert_unit()
        raise NonUnitDivisor("divisor is neither a base-field element nor a unit")

    def factor(self):
        value = self.base()
        if self.peek().kind == "^":
            caret = self.next()
            sign = 1
            if self.peek().kind == "-":
                self.next()
                sign = -1
            tok = self.expect("int")
            e = sign * tok.value
            if e < 0:
                value = self._invert(value, caret.pos) ** (-e)
            else:
                value = value**e
        return value

    def base(self):
        tok = self.next()
        if tok.kind == "int":
            return self.tower.from_scalar(tok.value)
        if tok.kind == "ident":
            name = tok.value
            if name == "x":
                return self.tower.x()
            if name == "zeta":
                return self.tower.from_scalar(self.tower.field.zeta())
            try:
                return self.tower.gen_element(name)
            except KeyError:
                raise UnknownIdentifier(f"unknown identifier {name!r}") from None
        if tok.kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {tok.kind!r}", tok.pos)


def parse_expression(tower, text):
    """Parse a DSL expression into a canonical tower element."""
    return _Parser(tower, text).parse()
