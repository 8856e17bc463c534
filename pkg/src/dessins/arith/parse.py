"""Recursive-descent parser for the expression grammar used on the command line.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*        juxtaposition multiplies
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom   := INT | NAME | 'sqrt' '(' ['-'] INT ')' | '(' expr ')'

Names are the variables of the target domain; ``i`` denotes ``sqrt(-1)``
when allowed.
"""

import re
from dataclasses import dataclass

from ..errors import DomainError, ParseError
from .bivar import BivarPoly
from .quadext import QuadExt
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'op', 'end'
    text: str
    col: int


def tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1):
            toks.append(Token("int", m.group(1), m.start(1) + 1))
        elif m.group(2):
            toks.append(Token("name", m.group(2), m.start(2) + 1))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3) + 1, text)
            toks.append(Token("op", ch, m.start(3) + 1))
        pos = m.end()
    toks.append(Token("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text, domain):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.dom = domain

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.take()
        if t.text != text:
            found = repr(t.text) if t.kind != "end" else "end of input"
            raise ParseError(f"expected {text!r}, found {found}", t.col, self.text)
        return t

    def fail(self, msg, tok):
        raise ParseError(msg, tok.col, self.text)

    def parse(self):
        if self.peek().kind == "end":
            self.fail("empty expression", self.peek())
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            self.fail(f"unexpected {t.text!r}", t)
        return v

    def expr(self):
        v = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def _starts_atom(self, t):
        return t.kind in ("int", "name") or (t.kind == "op" and t.text == "(")

    def term(self):
        v = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in ("*", "/"):
                self.take()
                w = self.unary()
                if t.text == "*":
                    v = v * w
                else:
                    v = self.dom.div(v, w, t)
            elif self._starts_atom(t):
                v = v * self.unary()
            else:
                return v

    def unary(self):
        t = self.peek()
        if t.kind == "op" and t.text in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t.text == "-" else v
        return self.power()

    def _signed_int(self):
        neg = False
        if self.peek().text == "-":
            self.take()
            neg = True
        t = self.take()
        if t.kind != "int":
            self.fail("expected an integer", t)
        n = int(t.text)
        return -n if neg else n

    def power(self):
        v = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            if self.peek().text == "(":
                self.take()
                n = self._signed_int()
                self.expect(")")
            else:
                n = self._signed_int()
            return self.dom.pow(v, n, t)
        return v

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return self.dom.const(int(t.text))
        if t.kind == "name":
            if t.text == "sqrt":
                self.expect("(")
                d = self._signed_int()
                self.expect(")")
                return self.dom.sqrt(d, t)
            return self.dom.name(t.text, t)
        if t.kind == "op" and t.text == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t.kind == "end":
            self.fail("unexpected end of input", t)
        self.fail(f"unexpected {t.text!r}", t)


class _Domain:
    variables = ()

    def __init__(self, allow_i=False):
        self.allow_i = allow_i

    def sqrt(self, d, tok):
        try:
            return self.const(QuadExt.sqrt(d))
        except DomainError as exc:
            raise ParseError(str(exc), tok.col) from None

    def scalar_name(self, name, tok):
        if name == "i" and self.allow_i:
            return self.const(QuadExt.sqrt(-1))
        raise ParseError(f"unknown name {name!r}", tok.col)

    def div(self, a, b, tok):
        try:
            return a / b
        except DomainError as exc:
            raise ParseError(str(exc), tok.col) from None

    def pow(self, v, n, tok):
        try:
            return v ** n
        except DomainError as exc:
            raise ParseError(str(exc), tok.col) from None


class RatFuncDomain(_Domain):
    def __init__(self, var="z", allow_i=False):
        super().__init__(allow_i)
        self.var = var

    def const(self, c):
        return RatFunc.constant(c, self.var)

    def name(self, name, tok):
        if name == self.var:
            return RatFunc.variable(self.var)
        return self.scalar_name(name, tok)


class BivarDomain(_Domain):
    def const(self, c):
        return BivarPoly.constant(c)

    def name(self, name, tok):
        if name == "X":
            return BivarPoly.X()
        if name == "Y":
            return BivarPoly.Y()
        return self.scalar_name(name, tok)

    def pow(self, v, n, tok):
        if n < 0:
            raise ParseError("negative exponent in a polynomial", tok.col)
        return super().pow(v, n, tok)


def parse_ratfunc(text, var="z", allow_i=False):
    """Parse ``text`` into a :class:`RatFunc` in ``var``."""
    try:
        return _Parser(text, RatFuncDomain(var, allow_i)).parse()
    except ParseError as exc:
        exc.text = text
        raise
    except DomainError as exc:
        raise ParseError(str(exc), None, text) from None


def parse_bivar(text):
    """Parse a polynomial in X and Y (the canonical modular-equation text)."""
    return _Parser(text, BivarDomain()).parse()


def parse_poly(text, var="z", allow_i=False):
    f = parse_ratfunc(text, var, allow_i)
    if f.den.degree > 0:
        raise ParseError("expected a polynomial, got a rational function", 1, text)
    return f.num / f.den.lc()
