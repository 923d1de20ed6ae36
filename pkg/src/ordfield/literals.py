"""Recursive-descent parser for field-element literals.

Grammar (whitespace-insensitive; U+2212 is accepted for '-'):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' int)*
    atom   := '-' atom | int | 'x' | '(' expr ')'

Values are computed directly in the requested field, so "5/7" is the exact
rational and "x^2*(1+x)/(2-x)" is a canonical RatFunc.  The Q field rejects
'x'.  Rendering is the inverse: render_elem(parse_elem(field, s)) parses
back to an equal element.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, ZeroDenominatorError
from .fields import Field
from .laurent import RF_X, rf_const
from .rationals import rat_div

_ATOM_STARTS = "digit, 'x', '-' or '('"


class _Scanner:
    def __init__(self, text: str):
        self.text = text.replace("−", "-")
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise ParseError("unexpected end of input", self.pos)
        self.pos += 1
        return ch

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])


def parse_elem(field: Field, text: str):
    """Parse a literal into an exact element of the given field."""
    sc = _Scanner(text)
    value = _expr(field, sc)
    if sc.peek() is not None:
        raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
    return value


def _expr(field: Field, sc: _Scanner):
    value = _term(field, sc)
    while sc.peek() in ("+", "-"):
        op = sc.take()
        rhs = _term(field, sc)
        value = value + rhs if op == "+" else value - rhs
    return value


def _term(field: Field, sc: _Scanner):
    value = _factor(field, sc)
    while sc.peek() in ("*", "/"):
        op = sc.take()
        rhs = _factor(field, sc)
        if op == "*":
            value = value * rhs
        elif field is Field.Q:
            value = rat_div(value, rhs)
        else:
            if not rhs:
                raise ZeroDenominatorError("division by the zero polynomial")
            value = value / rhs
    return value


def _factor(field: Field, sc: _Scanner):
    value = _atom(field, sc)
    while sc.peek() == "^":
        sc.take()
        k = sc.take_int()
        if k < 0 and not value:
            raise ZeroDenominatorError("zero raised to a negative power")
        value = value**k
    return value


def _atom(field: Field, sc: _Scanner):
    ch = sc.peek()
    if ch is None:
        raise ParseError(f"expected {_ATOM_STARTS}", sc.pos)
    if ch == "-":
        sc.take()
        return -_atom(field, sc)
    if ch == "(":
        sc.take()
        value = _expr(field, sc)
        if sc.peek() != ")":
            raise ParseError("expected ')'", sc.pos)
        sc.take()
        return value
    if ch == "x":
        if field is Field.Q:
            raise ParseError("variable 'x' is not allowed in field q", sc.pos)
        sc.take()
        return RF_X
    if ch.isdigit():
        n = sc.take_int()
        return Fraction(n) if field is Field.Q else rf_const(Fraction(n))
    raise ParseError(f"expected {_ATOM_STARTS}, got {ch!r}", sc.pos)
