"""Tiny arithmetic-expression parser shared by element and polynomial input.

Grammar: sum of products, with unary minus, integer literals, named atoms,
integer powers via ``^`` or ``**``, parentheses, ``/`` division, and function
calls such as ``sqrt(-1)``. The parse produces a value directly through the
callbacks supplied by the caller, so the same grammar serves field elements
and multivariate polynomials.
"""

from __future__ import annotations

import re


class ExprError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[+\-*/^(),]))")


def _tokenize(src):
    pos, out = 0, []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ExprError(f"bad character in expression at {src[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, tokens, const, atoms, funcs):
        self.toks = tokens
        self.i = 0
        self.const = const
        self.atoms = atoms
        self.funcs = funcs or {}

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ExprError(f"expected {op!r}, got {val!r}")

    def parse_sum(self):
        value = self.parse_product()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.next()
            rhs = self.parse_product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_product(self):
        value = self.parse_power()
        while self.peek() == ("op", "*") or self.peek() == ("op", "/"):
            _, op = self.next()
            rhs = self.parse_power()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.next()
            sign = 1
            if self.peek() == ("op", "-"):
                self.next()
                sign = -1
            kind, val = self.next()
            if kind != "num":
                raise ExprError("exponent must be an integer literal")
            return base ** (sign * val)
        return base

    def parse_atom(self):
        kind, val = self.next()
        if kind == "num":
            return self.const(val)
        if kind == "op" and val == "-":
            return -self.parse_power()
        if kind == "op" and val == "+":
            return self.parse_power()
        if kind == "op" and val == "(":
            inner = self.parse_sum()
            self.expect(")")
            return inner
        if kind == "name":
            if self.peek() == ("op", "("):
                self.next()
                args = [self.parse_sum()]
                while self.peek() == ("op", ","):
                    self.next()
                    args.append(self.parse_sum())
                self.expect(")")
                fn = self.funcs.get(val)
                if fn is None:
                    raise ExprError(f"unknown function {val!r}")
                return fn(*args)
            if val not in self.atoms:
                raise ExprError(f"unknown symbol {val!r}")
            return self.atoms[val]
        raise ExprError(f"unexpected token {val!r}")


def evaluate(src, const, atoms, funcs=None):
    """Parse ``src`` and fold it into a value.

    ``const`` maps integer literals into the target ring, ``atoms`` maps bare
    names to ring values, ``funcs`` maps call names to callables. Integer
    literals appearing as function arguments are passed through ``const`` too,
    so functions needing raw integers must unwrap them.
    """
    parser = _Parser(_tokenize(src), const, atoms, funcs)
    value = parser.parse_sum()
    if parser.peek()[0] != "end":
        raise ExprError(f"trailing input after expression: {src!r}")
    return value
