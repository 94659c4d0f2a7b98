import random

import pytest

from frobint.fields import FqField
from frobint.polys import FunctionField, Poly, RatFunc


@pytest.fixture
def F2t():
    return FunctionField(FqField(2), ("t",))


@pytest.fixture
def F7t():
    return FunctionField(FqField(7), ("t",))


@pytest.fixture
def rng():
    return random.Random(0xF0B)


def random_poly(K, rng, deg=3, terms=4):
    p = Poly.zero(K.fq, K.k)
    for _ in range(terms):
        mono = tuple(rng.randrange(deg + 1) for _ in range(K.k))
        c = rng.randrange(K.fq.q)
        p = p.add(Poly.monomial(K.fq, K.k, mono, c))
    return p


def random_ratfunc(K, rng, deg=3, terms=3):
    num = random_poly(K, rng, deg, terms)
    den = Poly.zero(K.fq, K.k)
    while den.is_zero():
        den = random_poly(K, rng, deg, terms)
    return RatFunc(num, den)
