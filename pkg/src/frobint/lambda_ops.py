"""Digit operators for the K^q-basis and the degree-scaled height.

K = F(t_1..t_k) is spanned over K^q by the q^k monomials t^e with
0 <= e_i < q.  Writing x = sum_j lambda_j(x)^q h_j defines the additive
operators lambda_j; on a polynomial they extract the monomials congruent to
h_j's exponent vector mod q, divide the exponents by q, and take coefficient
q-th roots (which always exist: the constant field is perfect).

For a fraction f/g one has lambda_j(f/g) = lambda_j(f g^(q-1)) / g, because
f/g = f g^(q-1) / g^q and lambda_j(u v^q) = lambda_j(u) v.

The height of x is ceil(totaldeg/w0) maximised over the reduced numerator
and denominator.  Using the reduced representation attains the minimum over
all representations: common factors only ever increase both degrees.
"""

from dataclasses import dataclass
from itertools import product

from .polys import Poly, RatFunc, poly_qth_root, grlex_key


class LambdaBasis:
    """The monomial basis h_1 = 1, ..., h_m of K over K^q, m = q^k.

    Basis elements are indexed 1..m in increasing grlex order, so index 1 is
    always the constant monomial.
    """

    def __init__(self, K):
        self.K = K
        q, k = K.q, K.k
        self.m = q ** k
        exps = sorted(product(range(q), repeat=k), key=grlex_key)
        self.exponents = tuple(exps)
        self.index_of = {e: i + 1 for i, e in enumerate(exps)}

    def monomial(self, j):
        """Exponent vector of h_j (1-based j)."""
        return self.exponents[j - 1]


def lambda_apply_poly(j, p, basis):
    q = basis.K.q
    eps = basis.monomial(j)
    F = p.field
    terms = {}
    for m, c in p.terms.items():
        if all(e % q == eq for e, eq in zip(m, eps)):
            terms[tuple((e - eq) // q for e, eq in zip(m, eps))] = F.root(c, q)
    return Poly(F, p.k, terms)


def lambda_apply(j, x, basis):
    """lambda_j(x) for a RatFunc x; 1 <= j <= basis.m."""
    if not 1 <= j <= basis.m:
        raise ValueError(f"basis index {j} out of range 1..{basis.m}")
    q = basis.K.q
    if x.is_poly():
        # reduced fractions have monic denominators, so a constant den is 1
        return RatFunc.from_poly(lambda_apply_poly(j, x.num, basis))
    shifted = x.num.mul(x.den.pow(q - 1))
    return RatFunc(lambda_apply_poly(j, shifted, basis), x.den)


def lambda_word_apply(word, x, basis):
    """Apply the composed operator lambda_{j1} o ... o lambda_{jl}: the last
    index in ``word`` acts first."""
    for j in reversed(word):
        x = lambda_apply(j, x, basis)
    return x


def lambda_transform(word, P, basis):
    """Coefficient-wise composed lambda operator on a VarPoly.

    Satisfies: the transform of P evaluated at a equals the operator applied
    to P(a^(q^l)), l = len(word); so P(a^(q^l)) = 0 iff every length-l
    transform vanishes at a.
    """
    return P.map_coeffs(lambda c: lambda_word_apply(word, c, basis))


def reconstruct(x, basis):
    """sum_j lambda_j(x)^q h_j; equals x for every x in K."""
    K = basis.K
    total = K.zero()
    for j in range(1, basis.m + 1):
        part = K.frob(lambda_apply(j, x, basis), 1)
        h = RatFunc.from_poly(Poly.monomial(K.fq, K.k, basis.monomial(j), K.fq.one))
        total = total.add(part.mul(h))
    return total


# -- heights -------------------------------------------------------------------


def _ceil_div(a, b):
    return -(-a // b)


@dataclass(frozen=True)
class HeightContext:
    """Degree scale w0 of the spanning subspace: height = ceil(totaldeg/w0).

    w0 must dominate 1, k(q-1), and the total degree of every coordinate of
    every digit in the active digit set, so digits have height <= 1 and the
    lambda offset below is valid.
    """
    w0: int

    def __post_init__(self):
        if self.w0 < 1:
            raise ValueError("w0 must be positive")


def height(x, ctx):
    """ceil(deg num / w0) max ceil(deg den / w0) on the reduced fraction."""
    return max(_ceil_div(x.num.total_degree(), ctx.w0),
               _ceil_div(x.den.total_degree(), ctx.w0))


def poly_height(p, ctx):
    return _ceil_div(p.total_degree(), ctx.w0)


def lambda_height_offset(K, ctx):
    """D with ht(lambda_j(f)) <= floor(ht(f)/q) + D on the polynomial ring.

    For the monomial basis, deg lambda_j(f) <= deg(f)/q always and the
    residual monomial factor h_j has degree <= k(q-1); D = ceil(k(q-1)/w0).
    """
    return _ceil_div(K.k * (K.q - 1), ctx.w0)
