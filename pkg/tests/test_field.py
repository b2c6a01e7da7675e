import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilaccess import I, ONE, R2, ZERO, FieldScalar, scalar_add, scalar_inv, scalar_mul

rat = st.fractions(min_value=-50, max_value=50, max_denominator=30)
scalars = st.builds(FieldScalar, rat, rat, rat, rat)


def test_identities():
    assert FieldScalar(1) + 0 == ONE
    half_r2 = FieldScalar(0, Fraction(1, 2))
    assert half_r2 + half_r2 == R2
    assert R2 * R2 == 2
    assert I * I == -1


def test_inverse_of_one_over_root_two_times_i():
    inv_r2 = R2.inverse()
    assert inv_r2 == FieldScalar(0, Fraction(1, 2))
    assert inv_r2 * (I * inv_r2) == I / 2


def test_inverses():
    assert scalar_inv(1 + R2) == FieldScalar(-1, 1)
    assert scalar_inv(I) == -I
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_functional_forms():
    assert scalar_add(R2, 1) == 1 + R2
    assert scalar_mul(I, I) == -1


def test_mixed_coercion():
    assert 2 * R2 == R2 + R2
    assert Fraction(1, 3) + ONE == FieldScalar(Fraction(4, 3))
    assert 1 - I == FieldScalar(1, 0, -1)
    assert 1 / R2 == R2 / 2


def test_parse_roundtrip():
    for x in (ZERO, ONE, R2, I, FieldScalar(1, -2, Fraction(3, 4), Fraction(-5, 7))):
        assert FieldScalar.parse(str(x)) == x


def test_hash_consistent_with_ints():
    assert hash(FieldScalar(3)) == hash(3)
    assert {FieldScalar(2): "a"}[2] == "a"


def test_power():
    assert R2**4 == 4
    assert (1 + I) ** 2 == 2 * I
    assert R2**-2 == Fraction(1, 2)


@given(scalars, scalars, scalars)
@settings(max_examples=200, deadline=None)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x


@given(scalars)
@settings(max_examples=200, deadline=None)
def test_inverse_property(x):
    if x:
        assert x * x.inverse() == 1
    assert x + (-x) == 0


@given(scalars, scalars)
@settings(max_examples=200, deadline=None)
def test_complex_embedding_is_a_homomorphism(x, y):
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-6 * max(1, abs(complex(x) * complex(y)))
    assert abs(complex(x + y) - (complex(x) + complex(y))) < 1e-9 * max(1, abs(complex(x)) + abs(complex(y)))


def test_thousand_random_samples():
    rng = random.Random(7)

    def draw():
        return FieldScalar(*(Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(4)))

    for _ in range(1000):
        x = draw()
        assert x + (-x) == 0
        if x:
            assert x.inverse() * x == 1
