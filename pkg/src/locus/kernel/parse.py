"""Recursive-descent parser for the polynomial text syntax.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Division is only allowed by nonzero constants, which is how rational
literals such as ``3/4`` are written.
"""
import re
from fractions import Fraction

from ..errors import InputError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"unexpected character at {pos} in {text!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise InputError(f"parse error in {self.text!r} near token {self.i}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise InputError("empty polynomial")
        p = self.expr()
        if self.i != len(self.toks):
            raise InputError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or not q:
                    raise InputError(f"division by non-constant or zero in {self.text!r}")
                p = p.scale(self.ring.field.inv(q.constant_coefficient()))
        return p

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            _, k = self.take("int")
            return base**k
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return self.ring.constant(Fraction(val))
        if kind == "id":
            self.take()
            if val not in self.ring.index:
                raise InputError(f"unknown variable {val!r} (ring has {self.ring.variables})")
            return self.ring.gen(val)
        if (kind, val) == ("op", "("):
            self.take()
            p = self.expr()
            self.take("op", ")")
            return p
        raise InputError(f"parse error in {self.text!r} near token {self.i}")


def parse_polynomial(text: str, ring):
    if not isinstance(text, str):
        raise InputError(f"polynomial must be a string, got {text!r}")
    return _Parser(text, ring).parse()
