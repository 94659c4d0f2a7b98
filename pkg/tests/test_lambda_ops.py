import random

from frobint.fields import FqField
from frobint.lambda_ops import (HeightContext, LambdaBasis, height,
                                lambda_apply, lambda_height_offset,
                                lambda_transform, lambda_word_apply,
                                poly_height, reconstruct)
from frobint.polys import FunctionField, Poly, RatFunc
from frobint.varpoly import VarPoly

from conftest import random_poly, random_ratfunc


def test_basis_indexing(F2t):
    basis = LambdaBasis(F2t)
    assert basis.m == 2
    assert basis.monomial(1) == (0,)
    assert basis.monomial(2) == (1,)


def test_basis_two_vars():
    K = FunctionField(FqField(3), ("t1", "t2"))
    basis = LambdaBasis(K)
    assert basis.m == 9
    assert basis.monomial(1) == (0, 0)


def test_lambda_digit_extraction(F2t):
    # t^2 + t + 1 = (t+1)^2 * 1 + 1^2 * t over F_2
    basis = LambdaBasis(F2t)
    x = F2t.parse("t^2 + t + 1")
    assert lambda_apply(1, x, basis) == F2t.parse("t + 1")
    assert lambda_apply(2, x, basis) == F2t.one()
    assert lambda_apply(1, F2t.zero(), basis).is_zero()
    assert lambda_apply(2, F2t.zero(), basis).is_zero()


def test_reconstruction_random(F7t, rng):
    basis = LambdaBasis(F7t)
    # spec asks for >= 1000 sampled reconstructions; spread over two fields
    for _ in range(700):
        x = random_ratfunc(F7t, rng, deg=4)
        assert reconstruct(x, basis) == x


def test_reconstruction_random_two_vars(rng):
    K = FunctionField(FqField(2), ("t1", "t2"))
    basis = LambdaBasis(K)
    for _ in range(300):
        x = random_ratfunc(K, rng, deg=3)
        assert reconstruct(x, basis) == x


def test_lambda_transform_identity_word(F2t):
    basis = LambdaBasis(F2t)
    P = VarPoly(F2t, 1, 0, {(2,): F2t.one(), (1,): F2t.parse("t^2")})
    assert lambda_transform((), P, basis) == P


def test_lambda_transform_example(F2t):
    # x^2 + t^2*x with the h=1 word: coefficient t^2 -> t, constants fixed
    basis = LambdaBasis(F2t)
    P = VarPoly(F2t, 1, 0, {(2,): F2t.one(), (1,): F2t.parse("t^2")})
    Q = lambda_transform((1,), P, basis)
    assert Q == VarPoly(F2t, 1, 0, {(2,): F2t.one(), (1,): F2t.parse("t")})


def test_lambda_transform_evaluation_identity(F7t, rng):
    # transform of P evaluated at a == composed lambda of P(a^(q^l))
    basis = LambdaBasis(F7t)
    for _ in range(40):
        coeffs = [random_ratfunc(F7t, rng, deg=2) for _ in range(3)]
        P = VarPoly(F7t, 1, 0, {(i,): c for i, c in enumerate(coeffs)})
        a = random_ratfunc(F7t, rng, deg=2)
        ell = rng.randrange(4)
        word = tuple(rng.randrange(1, basis.m + 1) for _ in range(ell))
        lhs = lambda_word_apply(word, P.evaluate([F7t.frob(a, ell)], []), basis)
        rhs = lambda_transform(word, P, basis).evaluate([a], [])
        assert lhs == rhs


def test_height_examples(F2t, F7t):
    ctx1 = HeightContext(1)
    assert height(F7t.constant(3), ctx1) == 0
    assert height(F7t.parse("t^3"), ctx1) == 3
    # (t^3+1)/(t+1) reduces to t^2+t+1 over F_2: height 2
    assert height(F2t.parse("(t^3+1)/(t+1)"), ctx1) == 2
    assert height(F7t.parse("(t^2+1)/t^3"), HeightContext(2)) == 2


def test_lambda_height_offset_examples(F2t, F7t):
    assert lambda_height_offset(F2t, HeightContext(1)) == 1
    assert lambda_height_offset(F7t, HeightContext(6)) == 1
    K22 = FunctionField(FqField(2), ("t1", "t2"))
    assert lambda_height_offset(K22, HeightContext(1)) == 2


def test_height_contraction(F7t, rng):
    # Lemma-style contraction on the polynomial ring
    ctx = HeightContext(1)
    basis = LambdaBasis(F7t)
    D = lambda_height_offset(F7t, ctx)
    for _ in range(300):
        p = random_poly(F7t, rng, deg=9, terms=5)
        x = RatFunc.from_poly(p)
        h = height(x, ctx)
        for j in (1, 3, basis.m):
            assert height(lambda_apply(j, x, basis), ctx) <= h // 7 + D
