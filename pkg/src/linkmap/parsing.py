"""
A small recursive-descent parser shared by the element, ring, Laurent and
word grammars.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*          juxtaposition multiplies
    factor := INT | NAME ['^' INT] | '(' expr ')' ['^' INT] | '[' expr ',' expr ']' ['^' INT]

What the names mean, and which operations are legal, is decided by an
`Algebra` supplied by the caller.
"""

from __future__ import annotations

import re
from typing import Any, List, Optional, Tuple


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\^)|(\+)|(-)|(\*)|(\()|(\))|(\[)|(\])|(,))")
_KINDS = ("int", "name", "^", "+", "-", "*", "(", ")", "[", "]", ",")


def tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        for kind, value in zip(_KINDS, m.groups()):
            if value is not None:
                tokens.append((kind, value))
                break
        pos = m.end()
    return tokens


class Algebra:
    """Callbacks used by the parser.  Unsupported operations raise ParseError."""

    def const(self, n: int) -> Any:
        raise ParseError("integer constants are not allowed here")

    def gen(self, name: str, exponent: int) -> Any:
        raise NotImplementedError

    def add(self, a: Any, b: Any) -> Any:
        raise ParseError("sums are not allowed here")

    def neg(self, a: Any) -> Any:
        raise ParseError("negation is not allowed here")

    def mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def inv(self, a: Any) -> Any:
        raise ParseError("inverse is not defined here")


class _Parser:
    def __init__(self, text: str, algebra: Algebra):
        self.tokens = tokenize(text)
        self.pos = 0
        self.alg = algebra

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            got = self.tokens[self.pos][1] if self.pos < len(self.tokens) else "end of input"
            raise ParseError(f"expected {kind!r}, got {got!r}")
        value = self.tokens[self.pos][1]
        self.pos += 1
        return value

    def parse(self) -> Any:
        if not self.tokens:
            return self.alg.one()
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"unexpected token {self.tokens[self.pos][1]!r}")
        return value

    def expr(self) -> Any:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek()) == "-" else 1
        value = self.term()
        if sign < 0:
            value = self.alg.neg(value)
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())
            rhs = self.term()
            value = self.alg.add(value, rhs if op == "+" else self.alg.neg(rhs))
        return value

    def term(self) -> Any:
        value = self.factor()
        while True:
            kind = self.peek()
            if kind == "*":
                self.take("*")
                value = self.alg.mul(value, self.factor())
            elif kind in ("int", "name", "(", "["):
                value = self.alg.mul(value, self.factor())
            else:
                return value

    def exponent(self) -> Optional[int]:
        if self.peek() != "^":
            return None
        self.take("^")
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek()) == "-" else 1
        return sign * int(self.take("int"))

    def factor(self) -> Any:
        kind = self.peek()
        if kind == "int":
            n = int(self.take("int"))
            if self.peek() == "^":
                raise ParseError("integer powers of constants are not supported")
            return self.alg.const(n)
        if kind == "name":
            name = self.take("name")
            e = self.exponent()
            return self.alg.gen(name, 1 if e is None else e)
        if kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return self._power(value, self.exponent())
        if kind == "[":
            self.take("[")
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take("]")
            value = self.alg.mul(self.alg.mul(a, b), self.alg.mul(self.alg.inv(a), self.alg.inv(b)))
            return self._power(value, self.exponent())
        got = self.tokens[self.pos][1] if self.pos < len(self.tokens) else "end of input"
        raise ParseError(f"unexpected {got!r}")

    def _power(self, value: Any, e: Optional[int]) -> Any:
        if e is None:
            return value
        if e < 0:
            value, e = self.alg.inv(value), -e
        result = self.alg.one()
        for _ in range(e):
            result = self.alg.mul(result, value)
        return result


def parse_with(text: str, algebra: Algebra) -> Any:
    return _Parser(text, algebra).parse()


def names_in(text: str) -> set:
    return {value for kind, value in tokenize(text) if kind == "name"}

