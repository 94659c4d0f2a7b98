"""Sparse multivariate polynomials over F_q and the rational function field
K = F_q(t_1, ..., t_k).

Monomials are exponent tuples of length k; the global monomial order is
graded lexicographic (compare total degree, then the exponent tuple).  A
RatFunc is always stored reduced (gcd of numerator and denominator is 1)
with the denominator scaled so its grlex-leading coefficient is 1; two
equal field elements therefore compare equal structurally.

Multivariate gcd uses the primitive pseudo-remainder sequence, recursing on
the number of variables; coefficients live in a field so the univariate
base case is plain Euclid.
"""

from .errors import ValidationError
from .fields import FqField


def grlex_key(mono):
    return (sum(mono), mono)


class Poly:
    """Element of F_q[t_1..t_k]; ``terms`` maps exponent tuple -> nonzero coeff."""

    __slots__ = ("field", "k", "terms", "_key")

    def __init__(self, field, k, terms):
        self.field = field
        self.k = k
        self.terms = {m: c for m, c in terms.items() if c != 0}
        self._key = None

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, field, k):
        return cls(field, k, {})

    @classmethod
    def const(cls, field, k, c):
        return cls(field, k, {(0,) * k: c} if c else {})

    @classmethod
    def variable(cls, field, k, i):
        mono = tuple(1 if j == i else 0 for j in range(k))
        return cls(field, k, {mono: field.one})

    @classmethod
    def monomial(cls, field, k, mono, c):
        return cls(field, k, {tuple(mono): c} if c else {})

    # -- basic queries ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.k, 0)

    def total_degree(self):
        """Total degree; 0 for the zero polynomial (convenient for heights)."""
        return max((sum(m) for m in self.terms), default=0)

    def leading(self):
        """(monomial, coefficient) of the grlex-leading term; None if zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"Poly({format_poly(self, tuple(f't{i+1}' for i in range(self.k))) })"

    # -- arithmetic -------------------------------------------------------

    def add(self, other):
        F = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(terms.get(m, 0), c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly(F, self.k, terms)

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        F = self.field
        return Poly(F, self.k, {m: F.neg(c) for m, c in self.terms.items()})

    def mul(self, other):
        F = self.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = F.add(terms.get(m, 0), F.mul(c1, c2))
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly(F, self.k, terms)

    def scale(self, c):
        F = self.field
        if c == 0:
            return Poly.zero(F, self.k)
        return Poly(F, self.k, {m: F.mul(x, c) for m, x in self.terms.items()})

    def shift(self, mono):
        return Poly(self.field, self.k,
                    {tuple(a + b for a, b in zip(m, mono)): c for m, c in self.terms.items()})

    def pow(self, n):
        if n < 0:
            raise ValueError("negative power of a Poly")
        result = Poly.const(self.field, self.k, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    def monic(self):
        """Scale so the grlex-leading coefficient is 1."""
        lead = self.leading()
        if lead is None or lead[1] == self.field.one:
            return self
        return self.scale(self.field.inv(lead[1]))


# -- division and gcd ------------------------------------------------------

def poly_divmod(f, g):
    """Long division f = q*g + r under grlex; r has no term divisible by lt(g)."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    F = f.field
    q = Poly.zero(F, f.k)
    r = Poly.zero(F, f.k)
    gm, gc = g.leading()
    gcinv = F.inv(gc)
    work = f
    while not work.is_zero():
        m, c = work.leading()
        if all(a >= b for a, b in zip(m, gm)):
            factor_m = tuple(a - b for a, b in zip(m, gm))
            factor_c = F.mul(c, gcinv)
            piece = Poly.monomial(F, f.k, factor_m, factor_c)
            q = q.add(piece)
            work = work.sub(piece.mul(g))
        else:
            piece = Poly.monomial(F, f.k, m, c)
            r = r.add(piece)
            work = work.sub(piece)
    return q, r


def poly_exact_div(f, g):
    q, r = poly_divmod(f, g)
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q


def _to_dense(p):
    out = [0] * (p.total_degree() + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _from_dense(coeffs, field):
    return Poly(field, 1, {(e,): c for e, c in enumerate(coeffs) if c})


def _dense_mod_prime(a, b, p):
    """a mod b for dense univariate coefficient lists over a prime field."""
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db:
        if a[-1]:
            f = a[-1] * inv % p
            off = len(a) - 1 - db
            for i in range(db):
                a[off + i] = (a[off + i] - f * b[i]) % p
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [0]


def _dense_mod_field(a, b, F):
    a = a[:]
    db = len(b) - 1
    inv = F.inv(b[-1])
    while len(a) - 1 >= db:
        if a[-1]:
            f = F.mul(a[-1], inv)
            off = len(a) - 1 - db
            for i in range(db):
                a[off + i] = F.sub(a[off + i], F.mul(f, b[i]))
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [0]


def _dense_gcd(a, b, F):
    mod = (lambda x, y: _dense_mod_prime(x, y, F.p)) if F.e == 1 else \
        (lambda x, y: _dense_mod_field(x, y, F))
    while len(b) > 1 or b[0]:
        a, b = b, mod(a, b)
    return a


def _dense_exact_div(a, b, F):
    """Exact quotient of dense univariate lists."""
    if F.e == 1:
        p = F.p
        inv = pow(b[-1], p - 2, p)
        a = a[:]
        q = [0] * (len(a) - len(b) + 1)
        for off in range(len(q) - 1, -1, -1):
            f = a[off + len(b) - 1] * inv % p
            q[off] = f
            if f:
                for i in range(len(b)):
                    a[off + i] = (a[off + i] - f * b[i]) % p
        return q
    inv = F.inv(b[-1])
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    for off in range(len(q) - 1, -1, -1):
        f = F.mul(a[off + len(b) - 1], inv)
        q[off] = f
        if f:
            for i in range(len(b)):
                a[off + i] = F.sub(a[off + i], F.mul(f, b[i]))
    return q


def _gcd_univariate(f, g):
    F = f.field
    d = _dense_gcd(_to_dense(f), _to_dense(g), F)
    lead = d[-1]
    if lead != F.one:
        inv = F.inv(lead)
        d = [F.mul(c, inv) for c in d]
    return _from_dense(d, F)


def _to_recursive(f, var):
    """View f as a polynomial in variable ``var`` with (k-1)-variable coeffs."""
    out = {}
    for m, c in f.terms.items():
        d = m[var]
        rest = m[:var] + m[var + 1:]
        out.setdefault(d, {})[rest] = c
    return {d: Poly(f.field, f.k - 1, t) for d, t in out.items()}


def _from_recursive(rec, var, field, k):
    terms = {}
    for d, coeff in rec.items():
        for m, c in coeff.terms.items():
            terms[m[:var] + (d,) + m[var:]] = c
    return Poly(field, k, terms)


def _rec_degree(rec):
    return max(rec, default=-1)


def _rec_mul_coeff(rec, c):
    out = {}
    for d, p in rec.items():
        m = p.mul(c)
        if not m.is_zero():
            out[d] = m
    return out


def _rec_sub(a, b):
    out = dict(a)
    for d, p in b.items():
        s = out[d].sub(p) if d in out else p.neg()
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _rec_shift(rec, n):
    return {d + n: p for d, p in rec.items()}


def _content(rec, field, k):
    """Gcd of the coefficients of a recursive poly (a (k-1)-variable Poly)."""
    cont = Poly.zero(field, k - 1)
    for p in rec.values():
        cont = poly_gcd(cont, p)
    return cont


def _primitive_part(f, var):
    rec = _to_recursive(f, var)
    cont = _content(rec, f.field, f.k)
    if cont.is_zero():
        return f, cont
    pp = {d: poly_exact_div(p, cont) for d, p in rec.items()}
    return _from_recursive(pp, var, f.field, f.k), cont


def _pseudo_rem(f_rec, g_rec, field, k):
    """Pseudo-remainder of f by g (recursive form, main-variable degree)."""
    df, dg = _rec_degree(f_rec), _rec_degree(g_rec)
    lc_g = g_rec[dg]
    r = dict(f_rec)
    while _rec_degree(r) >= dg and r:
        dr = _rec_degree(r)
        lc_r = r[dr]
        r = _rec_mul_coeff(r, lc_g)
        sub = _rec_shift(_rec_mul_coeff(g_rec, lc_r), dr - dg)
        r = _rec_sub(r, sub)
    return r


def poly_gcd(f, g):
    """Monic gcd of multivariate polynomials over F_q."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.k == 0 or f.is_constant() or g.is_constant():
        return Poly.const(f.field, f.k, f.field.one)
    k = f.k
    if k == 1:
        return _gcd_univariate(f, g)
    var = k - 1
    f_rec = _to_recursive(f, var)
    g_rec = _to_recursive(g, var)
    if _rec_degree(f_rec) < _rec_degree(g_rec):
        f, g = g, f
        f_rec, g_rec = g_rec, f_rec
    cont_f = _content(f_rec, f.field, k)
    cont_g = _content(g_rec, f.field, k)
    cont = poly_gcd(cont_f, cont_g)
    fp = {d: poly_exact_div(p, cont_f) for d, p in f_rec.items()}
    gp = {d: poly_exact_div(p, cont_g) for d, p in g_rec.items()}
    while gp:
        r = _pseudo_rem(fp, gp, f.field, k)
        if not r:
            fp = gp
            break
        rc = _content(r, f.field, k)
        fp, gp = gp, {d: poly_exact_div(p, rc) for d, p in r.items()}
    result = _from_recursive(fp, var, f.field, k)
    pp, _ = _primitive_part(result, var)
    return _finish_gcd(pp, cont, var)


def _finish_gcd(pp, cont, var):
    """Re-attach the content (a (k-1)-variable poly) along the other variables."""
    field, k = pp.field, pp.k
    cont_lift = Poly(field, k, {m[:var] + (0,) + m[var:]: c for m, c in cont.terms.items()})
    return pp.mul(cont_lift).monic()


# -- rational functions -----------------------------------------------------

class RatFunc:
    """Reduced fraction num/den of Polys; den monic under grlex."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den, reduce=True):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = Poly.const(den.field, den.k, den.field.one)
            elif den.is_constant():
                pass
            elif num.k == 1:
                F = num.field
                dn, dd = _to_dense(num), _to_dense(den)
                g = _dense_gcd(dn, dd, F)
                if len(g) > 1:
                    num = _from_dense(_dense_exact_div(dn, g, F), F)
                    den = _from_dense(_dense_exact_div(dd, g, F), F)
            else:
                g = poly_gcd(num, den)
                if not (g.is_constant() and g.constant_coeff() == den.field.one):
                    num = poly_exact_div(num, g)
                    den = poly_exact_div(den, g)
            _, lc = den.leading()
            if lc != den.field.one:
                inv = den.field.inv(lc)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self._key = None

    @property
    def field(self):
        return self.num.field

    @property
    def k(self):
        return self.num.k

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly.const(p.field, p.k, p.field.one), reduce=False)

    @classmethod
    def const(cls, field, k, c):
        return cls.from_poly(Poly.const(field, k, c))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_coeff()

    def is_poly(self):
        return self.den.is_constant()

    def total_degree(self):
        """max(deg num, deg den) of the reduced representation."""
        return max(self.num.total_degree(), self.den.total_degree())

    def key(self):
        if self._key is None:
            self._key = (self.num.key(), self.den.key())
        return self._key

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        names = tuple(f"t{i+1}" for i in range(self.k))
        return f"RatFunc({format_ratfunc(self, names)})"

    def add(self, other):
        return RatFunc(self.num.mul(other.den).add(other.num.mul(self.den)),
                       self.den.mul(other.den))

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        return RatFunc(self.num.neg(), self.den, reduce=False)

    def mul(self, other):
        return RatFunc(self.num.mul(other.num), self.den.mul(other.den))

    def div(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num.mul(other.den), self.den.mul(other.num))

    def inv(self):
        return RatFunc.const(self.field, self.k, self.field.one).div(self)

    def pow(self, n):
        if n < 0:
            return self.inv().pow(-n)
        result = RatFunc.const(self.field, self.k, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result


# -- Frobenius and q-th roots ------------------------------------------------

def poly_power_q(p, Q):
    """p^Q for Q a power of the field characteristic: exponents scale, coeffs -> c^Q."""
    F = p.field
    return Poly(F, p.k, {tuple(e * Q for e in m): F.pow(c, Q) for m, c in p.terms.items()})


def frobenius_power(x, n, q):
    """x^(q^n) as a reduced fraction; exact for any RatFunc."""
    if n < 0:
        raise ValueError("Frobenius power wants n >= 0")
    Q = q ** n
    return RatFunc(poly_power_q(x.num, Q), poly_power_q(x.den, Q), reduce=False)


def poly_qth_root(p, q):
    """The q-th root of a Poly, or None.  Exponents must divide by q; the
    coefficient root is c^(1/q), which always exists in a finite field."""
    F = p.field
    terms = {}
    for m, c in p.terms.items():
        if any(e % q for e in m):
            return None
        terms[tuple(e // q for e in m)] = F.root(c, q)
    return Poly(F, p.k, terms)


def qth_root(x, q):
    """y with y^q = x, or None when x is not a q-th power in K.

    Criterion on the reduced representation: every exponent of num and den
    is divisible by q.
    """
    rn = poly_qth_root(x.num, q)
    if rn is None:
        return None
    rd = poly_qth_root(x.den, q)
    if rd is None:
        return None
    return RatFunc(rn, rd, reduce=False)


# -- printing ----------------------------------------------------------------

def format_poly(p, names, gen="g"):
    if p.is_zero():
        return "0"
    field = p.field
    parts = []
    for m, c in sorted(p.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True):
        factors = []
        for e, name in zip(m, names):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        cs = field.fmt(c, gen)
        need_paren = field.e > 1 and ("+" in cs or cs.count("*") or cs.count("^"))
        if not factors:
            parts.append(f"({cs})" if need_paren else cs)
        elif c == field.one:
            parts.append("*".join(factors))
        else:
            cs = f"({cs})" if need_paren else cs
            parts.append(cs + "*" + "*".join(factors))
    return " + ".join(parts)


def format_ratfunc(x, names, gen="g"):
    ns = format_poly(x.num, names, gen)
    if x.den.is_constant() and x.den.constant_coeff() == x.field.one:
        return ns
    ds = format_poly(x.den, names, gen)
    if len(x.num.terms) > 1:
        ns = f"({ns})"
    if len(x.den.terms) > 1:
        ds = f"({ds})"
    return f"{ns}/{ds}"


# -- the function field context ----------------------------------------------

class FunctionField:
    """K = F(t_1..t_k) for a constant field F, with the operative Frobenius q.

    Normally q == fq.q.  Constant-field extensions F_{q^j}(t_1..t_k) keep the
    original q (the group Frobenius does not grow with the constants), so q
    divides fq.q and ``fq.q`` is a power of ``q``.
    """

    def __init__(self, fq, variables, q=None):
        if isinstance(variables, int):
            variables = tuple(f"t{i+1}" for i in range(variables))
        self.fq = fq
        self.vars = tuple(variables)
        self.k = len(self.vars)
        self.q = fq.q if q is None else q
        if self.k < 1:
            raise ValidationError("need at least one transcendental variable")
        if self.fq.q != self.q and (self.fq.q % self.q or self.fq.p ** self.fq.e != self.fq.q):
            raise ValidationError("constant field must be an extension of F_q")

    def __eq__(self, other):
        return (isinstance(other, FunctionField) and self.fq == other.fq
                and self.vars == other.vars and self.q == other.q)

    def __hash__(self):
        return hash((self.fq, self.vars, self.q))

    def __repr__(self):
        return f"FunctionField(q={self.q}, fq={self.fq.q}, vars={self.vars})"

    def zero(self):
        return RatFunc.from_poly(Poly.zero(self.fq, self.k))

    def one(self):
        return RatFunc.const(self.fq, self.k, self.fq.one)

    def constant(self, c):
        return RatFunc.const(self.fq, self.k, self.fq.check(c))

    def from_int(self, n):
        return RatFunc.const(self.fq, self.k, self.fq.from_int(n))

    def t(self, i=0):
        return RatFunc.from_poly(Poly.variable(self.fq, self.k, i))

    def frob(self, x, n=1):
        return frobenius_power(x, n, self.q)

    def qth_root(self, x):
        return qth_root(x, self.q)

    def fmt(self, x):
        return format_ratfunc(x, self.vars)

    def parse(self, text):
        from .parsing import parse_ratfunc
        return parse_ratfunc(text, self)
