"""Polynomials in the group coordinates with K-rational coefficients.

A VarPoly lives in K[x_1..x_a, y_1^{±1}..y_b^{±1}]: exponents of the first
``a`` variables are non-negative, the remaining ``b`` may be negative
(Laurent on the torus chart).  Coefficients are RatFunc values over K.

The canonical (normalized) shape used for automaton states clears negative
y-exponents with a monomial factor and scales the grlex-leading coefficient
to 1; see ``normalize``.
"""

from .errors import ValidationError
from .polys import RatFunc, grlex_key


class VarPoly:
    __slots__ = ("K", "a", "b", "terms", "_key")

    def __init__(self, K, a, b, terms):
        self.K = K
        self.a = a
        self.b = b
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        self._key = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, K, a, b):
        return cls(K, a, b, {})

    @classmethod
    def scalar(cls, K, a, b, c):
        if isinstance(c, int):
            c = K.from_int(c)
        return cls(K, a, b, {(0,) * (a + b): c})

    @classmethod
    def coordinate(cls, K, a, b, i):
        mono = tuple(1 if j == i else 0 for j in range(a + b))
        return cls(K, a, b, {mono: K.one()})

    @classmethod
    def monomial(cls, K, a, b, mono, c):
        return cls(K, a, b, {tuple(mono): c})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_coeff(self):
        zero_m = (0,) * (self.a + self.b)
        return self.terms.get(zero_m, self.K.zero())

    def total_degree(self):
        return max((sum(abs(e) for e in m) for m in self.terms), default=0)

    def leading(self):
        if not self.terms:
            return None
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(
                ((m, c.key()) for m, c in self.terms.items()),
                key=lambda t: grlex_key(t[0]), reverse=True))
        return self._key

    def __eq__(self, other):
        return isinstance(other, VarPoly) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"VarPoly({format_varpoly(self)})"

    # -- arithmetic ----------------------------------------------------------

    def add(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms[m].add(c) if m in terms else c
            if s.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = s
        return VarPoly(self.K, self.a, self.b, terms)

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        return VarPoly(self.K, self.a, self.b, {m: c.neg() for m, c in self.terms.items()})

    def mul(self, other):
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                prod = c1.mul(c2)
                s = terms[m].add(prod) if m in terms else prod
                if s.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return VarPoly(self.K, self.a, self.b, terms)

    def scale(self, c):
        if c.is_zero():
            return VarPoly.zero(self.K, self.a, self.b)
        return VarPoly(self.K, self.a, self.b, {m: x.mul(c) for m, x in self.terms.items()})

    def pow(self, n):
        if n < 0:
            raise ValueError("negative power of a VarPoly")
        result = VarPoly.scalar(self.K, self.a, self.b, self.K.one())
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    def map_coeffs(self, f):
        return VarPoly(self.K, self.a, self.b, {m: f(c) for m, c in self.terms.items()})

    def unit_inverse(self, a):
        """Inverse when self is a single term with no x-part (a unit on the
        torus chart); raises ValueError otherwise."""
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        (m, c), = self.terms.items()
        if any(m[:a]):
            raise ValueError("x-variables are not invertible")
        return VarPoly(self.K, self.a, self.b,
                       {tuple(-e for e in m): c.inv()})

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, xs, ys):
        """Value at additive coordinates xs and multiplicative ys (RatFuncs)."""
        K = self.K
        total = K.zero()
        for m, c in self.terms.items():
            v = c
            for e, x in zip(m[: self.a], xs):
                if e:
                    v = v.mul(x.pow(e))
            for e, y in zip(m[self.a:], ys):
                if e:
                    v = v.mul(y.pow(e))
            total = total.add(v)
        return total

    # -- canonical form --------------------------------------------------------

    def normalize(self):
        """Clear negative y-exponents with the minimal y-monomial, then scale
        the grlex-leading coefficient to 1.  Returns the zero poly unchanged."""
        if not self.terms:
            return self
        shifts = [0] * self.b
        for m in self.terms:
            for j in range(self.b):
                e = m[self.a + j]
                if e < 0:
                    shifts[j] = max(shifts[j], -e)
        if any(shifts):
            full = (0,) * self.a + tuple(shifts)
            terms = {tuple(x + s for x, s in zip(m, full)): c for m, c in self.terms.items()}
        else:
            terms = dict(self.terms)
        p = VarPoly(self.K, self.a, self.b, terms)
        _, lc = p.leading()
        if lc == self.K.one():
            return p
        return p.scale(lc.inv())


def format_varpoly(p, gen="g"):
    from .polys import format_ratfunc
    if p.is_zero():
        return "0"
    names = tuple(f"x{i+1}" for i in range(p.a)) + tuple(f"y{j+1}" for j in range(p.b))
    parts = []
    for m, c in sorted(p.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True):
        factors = []
        for e, name in zip(m, names):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        cs = format_ratfunc(c, p.K.vars, gen)
        if not factors:
            parts.append(f"({cs})" if ("+" in cs or "/" in cs or "*" in cs) else cs)
        elif c == p.K.one():
            parts.append("*".join(factors))
        else:
            if "+" in cs or "/" in cs or "*" in cs or "^" in cs:
                cs = f"({cs})"
            parts.append(cs + "*" + "*".join(factors))
    return " + ".join(parts)
