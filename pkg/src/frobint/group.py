"""The split commutative group G = Ga^a x Gm^b over F_q, its K-points, and
closed subvarieties of the affine/torus chart.

Points are coordinate vectors over K: ``add`` holds the a additive
coordinates, ``mul`` the b multiplicative ones (never zero).  The group law
is coordinatewise + on add and * on mul, so the q-power Frobenius acts by
raising every coordinate to the q-th power and the degree bound of the
multiplication polynomials (x+y and x*y) is 2.

A Variety is a canonical list of normalized VarPolys: negative y-exponents
cleared by a monomial factor, leading coefficient scaled to 1, sorted and
deduplicated.  Membership and translation act on the single chart; Zariski
closures in a projective embedding are never formed.
"""

from dataclasses import dataclass

from .errors import ValidationError
from .parsing import parse_varpoly
from .polys import FunctionField, RatFunc
from .varpoly import VarPoly, format_varpoly

MULT_DEGREE_BOUND = 2  # total degree of the group-law polynomials x+y, x*y


@dataclass(frozen=True)
class GroupShape:
    """Ranks of the split group plus the ambient function field."""
    a: int
    b: int
    K: FunctionField

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValidationError("group needs a + b >= 1 coordinates")

    @property
    def field(self):
        return self.K.fq

    @property
    def dim(self):
        return self.a + self.b


class GroupPoint:
    __slots__ = ("add", "mul", "_key")

    def __init__(self, add, mul):
        self.add = tuple(add)
        self.mul = tuple(mul)
        for y in self.mul:
            if y.is_zero():
                raise ValidationError("multiplicative coordinate is zero")
        self._key = None

    def key(self):
        if self._key is None:
            self._key = (tuple(x.key() for x in self.add),
                         tuple(y.key() for y in self.mul))
        return self._key

    def __eq__(self, other):
        return isinstance(other, GroupPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"GroupPoint(add={list(self.add)}, mul={list(self.mul)})"


def identity(shape):
    return GroupPoint([shape.K.zero()] * shape.a, [shape.K.one()] * shape.b)


def point_add(x, y):
    return GroupPoint([u.add(v) for u, v in zip(x.add, y.add)],
                      [u.mul(v) for u, v in zip(x.mul, y.mul)])


def point_neg(x):
    return GroupPoint([u.neg() for u in x.add], [u.inv() for u in x.mul])


def point_sub(x, y):
    return point_add(x, point_neg(y))


def point_frob(x, n, q):
    """Every coordinate raised to q^n."""
    from .polys import frobenius_power
    return GroupPoint([frobenius_power(u, n, q) for u in x.add],
                      [frobenius_power(u, n, q) for u in x.mul])


def point_scalar(n, x):
    """n.x in the Z[F]-module: multiplication on add (mod p), power on mul."""
    K = (x.add + x.mul)[0]
    field = K.field
    c = field.from_int(n)
    return GroupPoint([u.mul(RatFunc.const(field, u.k, c)) for u in x.add],
                      [u.pow(n) for u in x.mul])


def point_root(x, q, steps=1):
    """F^(-steps): coordinatewise q^steps-th root, or None when absent."""
    from .polys import qth_root
    add, mul = list(x.add), list(x.mul)
    for _ in range(steps):
        nxt_a, nxt_m = [], []
        for u in add:
            r = qth_root(u, q)
            if r is None:
                return None
            nxt_a.append(r)
        for u in mul:
            r = qth_root(u, q)
            if r is None:
                return None
            nxt_m.append(r)
        add, mul = nxt_a, nxt_m
    return GroupPoint(add, mul)


def is_identity(x):
    return all(u.is_zero() for u in x.add) and all(_is_one(u) for u in x.mul)


def _is_one(u):
    return u.is_constant() and u.constant_value() == u.field.one and u.den.is_constant()


def point_fmt(x, K):
    xs = ", ".join(K.fmt(u) for u in x.add)
    ys = ", ".join(K.fmt(u) for u in x.mul)
    return f"({xs} ; {ys})"


@dataclass(frozen=True)
class ModulePresentation:
    """Generators u_1..u_s of the submodule under the Z[F]-action."""
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValidationError("module presentation needs at least one generator")


class Variety:
    """Canonical normalized polynomial system cutting out a closed subset."""

    __slots__ = ("shape", "polys", "_key")

    def __init__(self, shape, polys):
        normalized = []
        seen = set()
        for p in polys:
            n = p.normalize()
            if n.is_zero():
                continue
            k = n.key()
            if k not in seen:
                seen.add(k)
                normalized.append(n)
        normalized.sort(key=VarPoly.key)
        self.shape = shape
        self.polys = tuple(normalized)
        self._key = None

    @classmethod
    def parse(cls, shape, texts):
        return cls(shape, [parse_varpoly(s, shape.K, shape.a, shape.b) for s in texts])

    @classmethod
    def whole_group(cls, shape):
        return cls(shape, [])

    def key(self):
        if self._key is None:
            self._key = tuple(p.key() for p in self.polys)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Variety) and self.shape == other.shape and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Variety[" + "; ".join(format_varpoly(p) for p in self.polys) + "]"

    def strings(self):
        return [format_varpoly(p) for p in self.polys]

    def has_nonzero_constant(self):
        return any(p.is_constant() and not p.is_zero() for p in self.polys)

    def max_total_degree(self):
        return max((p.total_degree() for p in self.polys), default=0)


def variety_contains(V, x):
    """All defining polynomials vanish at the point."""
    for p in V.polys:
        if not p.evaluate(x.add, x.mul).is_zero():
            return False
    return True


def variety_translate(V, g):
    """V - g = {h : h + g in V}: substitute x_i -> x_i + g_i, y_j -> g_j * y_j."""
    shape = V.shape
    K = shape.K
    a, b = shape.a, shape.b
    out = []
    for p in V.polys:
        # powers of (x_i + g_i) cached per polynomial
        xpow = [dict() for _ in range(a)]
        acc = VarPoly.zero(K, a, b)
        for m, c in p.terms.items():
            term = VarPoly.scalar(K, a, b, c)
            for i in range(a):
                e = m[i]
                if not e:
                    continue
                if e not in xpow[i]:
                    base = VarPoly.coordinate(K, a, b, i).add(
                        VarPoly.scalar(K, a, b, g.add[i]))
                    xpow[i][e] = base.pow(e)
                term = term.mul(xpow[i][e])
            ymono = [0] * (a + b)
            coef = K.one()
            for j in range(b):
                e = m[a + j]
                if e:
                    ymono[a + j] = e
                    coef = coef.mul(g.mul[j].pow(e))
            if any(ymono) or not _is_one(coef):
                term = term.mul(VarPoly.monomial(K, a, b, tuple(ymono), coef))
            acc = acc.add(term)
        out.append(acc)
    return Variety(shape, out)
