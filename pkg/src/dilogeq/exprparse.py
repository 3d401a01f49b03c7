"""Expression grammar for rational functions.

Accepts integers, rationals written with /, declared variable names,
+ - * / ^ with integer exponents, parentheses, and the literal i when the
field mode is gaussian.  Every error carries a 1-based line and column.

The parser evaluates directly into RationalFunction normal form; there is
no retained syntax tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import RationalFunction, ZeroDenominator
from .scalars import FieldElement


class ExprSyntaxError(SyntaxError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class UnknownVariable(ValueError):
    def __init__(self, name: str, line: int, col: int, hint: str = ""):
        tail = f"; {hint}" if hint else ""
        super().__init__(f"unknown variable {name!r} (line {line}, column {col}){tail}")
        self.name = name
        self.line = line
        self.col = col


class DivisionByZeroConstant(ZeroDivisionError):
    def __init__(self, line: int, col: int):
        super().__init__(f"division by an identically zero expression (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | one of "+-*/^()" | "end"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Token]:
    out = []
    line, col, i = 1, 1, 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            out.append(_Token("int", src[i:j], line, col))
            col += j - i
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(_Token("name", src[i:j], line, col))
            col += j - i
            i = j
        elif ch in "+-*/^()":
            out.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    out.append(_Token("end", "", line, col))
    return out


class _Parser:
    def __init__(self, tokens: list[_Token], universe: tuple[str, ...], gaussian: bool):
        self.toks = tokens
        self.pos = 0
        self.universe = universe
        self.gaussian = gaussian

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            what = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ExprSyntaxError(f"expected {kind!r}, found {what}", tok.line, tok.col)
        return self.take()

    def parse(self) -> RationalFunction:
        value = self.sum_expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {tok.text!r} after expression", tok.line, tok.col)
        return value

    def sum_expr(self) -> RationalFunction:
        value = self.term()
        while self.peek().kind in "+-":
            op = self.take()
            rhs = self.term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek().kind in "*/":
            op = self.take()
            rhs = self.unary()
            if op.kind == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDenominator:
                    raise DivisionByZeroConstant(op.line, op.col) from None
        return value

    def unary(self) -> RationalFunction:
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            return -self.unary()
        if tok.kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek().kind != "^":
            return base
        op = self.take()
        exp = self.signed_int()
        try:
            return base ** exp
        except ZeroDenominator:
            raise DivisionByZeroConstant(op.line, op.col) from None

    def signed_int(self) -> int:
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            return -self.signed_int()
        if tok.kind == "(":
            self.take()
            value = self.signed_int()
            self.expect(")")
            return value
        lit = self.expect("int")
        return int(lit.text)

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok.kind == "int":
            return RationalFunction.const(self.universe, FieldElement.of(Fraction(tok.text)))
        if tok.kind == "name":
            if self.gaussian and tok.text == "i":
                return RationalFunction.const(self.universe, FieldElement.i())
            if tok.text in self.universe:
                return RationalFunction.var(self.universe, tok.text)
            hint = "the literal i needs field mode Qi" if tok.text == "i" else ""
            raise UnknownVariable(tok.text, tok.line, tok.col, hint)
        if tok.kind == "(":
            value = self.sum_expr()
            self.expect(")")
            return value
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(f"expected a value, found {what}", tok.line, tok.col)


def parse_expression(src: str, variables: tuple[str, ...], field_mode: str = "Q") -> RationalFunction:
    """Parse src into a rational function over the declared variables."""
    if field_mode not in ("Q", "Qi"):
        raise ValueError(f"unknown field mode {field_mode!r}")
    gaussian = field_mode == "Qi"
    if gaussian and "i" in variables:
        raise ValueError("variable name 'i' collides with the imaginary unit in field mode Qi")
    parser = _Parser(_tokenize(src), tuple(variables), gaussian)
    return parser.parse()
