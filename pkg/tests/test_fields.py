import random

import pytest

from frobint.errors import ValidationError
from frobint.fields import FqField, random_irreducible


def test_prime_field_ops():
    F = FqField(7)
    assert F.q == 7
    assert F.add(5, 4) == 2
    assert F.sub(2, 5) == 4
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.pow(3, 6) == 1
    assert F.neg(0) == 0


def test_bad_field_data():
    with pytest.raises(ValidationError):
        FqField(6)
    with pytest.raises(ValidationError):
        FqField(2, 3)  # missing modulus
    with pytest.raises(ValidationError):
        FqField(2, 2, (1, 0, 1))  # x^2+1 = (x+1)^2 over F_2
    with pytest.raises(ValidationError):
        FqField(7, 1, (1, 1))


def test_extension_field_f4():
    # x^2 + x + 1 is irreducible over F_2
    F = FqField(2, 2, (1, 1, 1))
    g = 2  # encodes the generator
    assert F.mul(g, g) == F.add(g, 1)  # g^2 = g + 1
    assert F.pow(g, 3) == 1
    for a in range(1, 4):
        assert F.mul(a, F.inv(a)) == 1


def test_field_axioms_random():
    F = FqField(3, 2, (1, 0, 1))  # x^2 + 1 irreducible over F_3
    rng = random.Random(1)
    for _ in range(200):
        a, b, c = (rng.randrange(9) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_frobenius_root():
    F = FqField(2, 2, (1, 1, 1))
    for a in range(4):
        r = F.root(a, 2)
        assert F.mul(r, r) == a


def test_random_irreducible():
    rng = random.Random(2)
    mod = random_irreducible(7, 3, rng)
    F = FqField(7, 3, mod)
    assert F.q == 343
    a = 100
    assert F.pow(a, F.q - 1) == 1


def test_fmt_extension():
    F = FqField(2, 3, (1, 1, 0, 1))
    assert F.fmt(0) == "0"
    assert F.fmt(1) == "1"
    assert F.fmt(2) == "g"
    assert F.fmt(6) == "g^2+g"
