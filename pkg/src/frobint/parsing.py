"""Recursive-descent parser for field and variety literals.

Grammar (shared by rational-function literals over K and defining
polynomials of subvarieties):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+')* atom ('^' exponent)?
    atom   := integer | name | '(' expr ')'
    exponent := '-'? integer | '(' '-'? integer ')'

Integers reduce mod p.  Names are the t-variables, the extension-field
generator g, and (for variety polynomials) x1..xa, y1..yb.  Errors carry
character positions.
"""

import re

from .errors import ValidationError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            raise ValidationError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Evaluates directly into a caller-supplied domain."""

    def __init__(self, text, domain):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.domain = domain

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ValidationError(f"expected {op!r}", pos)

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ValidationError("trailing input", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = self.domain.add(value, rhs) if val == "+" else self.domain.sub(value, rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                if val == "*":
                    value = self.domain.mul(value, rhs)
                else:
                    value = self.domain.div(value, rhs, pos)
            else:
                return value

    def factor(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.factor()
            return inner if val == "+" else self.domain.neg(inner)
        value = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            n = self.exponent()
            value = self.domain.pow(value, n, self.tokens[self.i - 1][2])
        return value

    def exponent(self):
        kind, val, pos = self.take()
        if kind == "op" and val == "(":
            n = self.exponent()
            self.expect_op(")")
            return n
        sign = 1
        if kind == "op" and val == "-":
            sign = -1
            kind, val, pos = self.take()
        if kind != "int":
            raise ValidationError("expected an integer exponent", pos)
        return sign * val

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.domain.const_int(val)
        if kind == "name":
            return self.domain.symbol(val, pos)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ValidationError("expected a value", pos)


class _RatFuncDomain:
    def __init__(self, K):
        self.K = K

    def const_int(self, n):
        return self.K.from_int(n)

    def symbol(self, name, pos):
        K = self.K
        if name in K.vars:
            return K.t(K.vars.index(name))
        if name == "g" and K.fq.e > 1:
            from .polys import RatFunc, Poly
            return RatFunc.const(K.fq, K.k, K.fq.p)  # g encodes as the int p
        raise ValidationError(f"unknown symbol {name!r}", pos)

    def add(self, a, b):
        return a.add(b)

    def sub(self, a, b):
        return a.sub(b)

    def mul(self, a, b):
        return a.mul(b)

    def div(self, a, b, pos):
        if b.is_zero():
            raise ValidationError("division by zero", pos)
        return a.div(b)

    def neg(self, a):
        return a.neg()

    def pow(self, a, n, pos):
        if n < 0 and a.is_zero():
            raise ValidationError("negative power of zero", pos)
        return a.pow(n)


def parse_ratfunc(text, K):
    """Parse a rational-function literal over K."""
    return _Parser(text, _RatFuncDomain(K)).parse()


class _VarPolyDomain:
    """Variety-polynomial domain: Laurent in the y's, plain in the x's.

    Division is allowed by K-scalars and by single-term y-monomials; anything
    else is rejected (subvariety literals never need it).
    """

    def __init__(self, K, a, b):
        from .varpoly import VarPoly
        self.K = K
        self.a = a
        self.b = b
        self.VP = VarPoly

    def const_int(self, n):
        return self.VP.scalar(self.K, self.a, self.b, self.K.from_int(n))

    def symbol(self, name, pos):
        K, a, b = self.K, self.a, self.b
        if name in K.vars:
            return self.VP.scalar(K, a, b, K.t(K.vars.index(name)))
        if name == "g" and K.fq.e > 1:
            return self.VP.scalar(K, a, b, K.constant(K.fq.p))
        m = re.fullmatch(r"x(\d+)", name)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= a:
                raise ValidationError(f"x{i} out of range (additive rank {a})", pos)
            return self.VP.coordinate(K, a, b, i - 1)
        m = re.fullmatch(r"y(\d+)", name)
        if m:
            j = int(m.group(1))
            if not 1 <= j <= b:
                raise ValidationError(f"y{j} out of range (multiplicative rank {b})", pos)
            return self.VP.coordinate(K, a, b, a + j - 1)
        raise ValidationError(f"unknown symbol {name!r}", pos)

    def add(self, a, b):
        return a.add(b)

    def sub(self, a, b):
        return a.sub(b)

    def mul(self, a, b):
        return a.mul(b)

    def div(self, a, b, pos):
        try:
            inv = b.unit_inverse(self.a)
        except ValueError:
            raise ValidationError(
                "can only divide by coefficients and y-monomials", pos) from None
        return a.mul(inv)

    def neg(self, a):
        return a.neg()

    def pow(self, a, n, pos):
        if n >= 0:
            return a.pow(n)
        try:
            inv = a.unit_inverse(self.a)
        except ValueError:
            raise ValidationError(
                "negative powers need a coefficient or y-monomial base", pos) from None
        return inv.pow(-n)


def parse_varpoly(text, K, a, b):
    """Parse a defining polynomial in x1..xa, y1..yb with K coefficients."""
    return _Parser(text, _VarPolyDomain(K, a, b)).parse()
