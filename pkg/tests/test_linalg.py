import random
from fractions import Fraction

import pytest

from nilaccess import (
    AlgebraKind,
    DimensionError,
    ExactMatrix,
    NotNilpotentError,
    Partition,
    SingularMatrixError,
    SP,
    conjugate,
    determinant,
    direct_sum,
    elementary,
    identity,
    in_group,
    in_lie_algebra,
    inverse,
    jordan_block,
    jordan_type,
    mat_mul,
    mat_power,
    omega,
    rank,
    shrink,
    sp_move_witness,
    standard_form,
    zeros,
)
from nilaccess.field import R2, I
from nilaccess.linalg import rank_sequence
from nilaccess.witnesses import nontransitivity_family
from oracles import jordan_type_by_sequences, to_rows


def random_strict_upper(rng, n, density=0.5):
    return ExactMatrix(
        [[rng.randint(-3, 3) if j > i and rng.random() < density else 0 for j in range(n)] for i in range(n)]
    )


def random_unipotent(rng, n):
    """Product of a lower and an upper unitriangular matrix: always invertible."""
    lo = identity(n) + ExactMatrix([[rng.randint(-2, 2) if i > j else 0 for j in range(n)] for i in range(n)])
    up = identity(n) + ExactMatrix([[rng.randint(-2, 2) if j > i else 0 for j in range(n)] for i in range(n)])
    return lo @ up


def test_construction_and_indexing():
    x = ExactMatrix([[1, 2], [3, 4]])
    assert x.shape == (2, 2)
    assert x.entry(1, 2) == 2 and x[0, 1] == 2
    assert x.T.entry(1, 2) == 3
    assert x.trace() == 5
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2], [3]])


def test_serialization_roundtrip():
    x = ExactMatrix([[R2, I / 2], [Fraction(-1, 3), 0]])
    assert ExactMatrix.from_text(x.to_text()) == x
    assert ExactMatrix.from_json(x.to_json()) == x
    bad = x.to_json()
    bad["rows"] = 3
    with pytest.raises(DimensionError):
        ExactMatrix.from_json(bad)


def test_mat_mul_examples():
    x = ExactMatrix([[1, 2, 3], [0, R2, 1], [I, 0, 0]])
    assert mat_mul(identity(3), x) == x
    assert mat_mul(jordan_block(2), jordan_block(2)) == zeros(2)
    om = omega(AlgebraKind(SP, 4))
    assert om.T @ om == identity(4)
    with pytest.raises(DimensionError):
        mat_mul(identity(2), identity(3))


def test_rank_examples():
    assert rank(zeros(4)) == 0
    assert rank(identity(5)) == 5
    assert rank(ExactMatrix([[1, R2], [R2, 2]])) == 1
    assert rank(ExactMatrix([[1, I], [I, -1]])) == 1


def test_rank_of_constrained_family():
    rng = random.Random(3)
    for _ in range(20):
        params = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(7)]
        params[1] = params[1] or Fraction(1)
        assert rank(nontransitivity_family(*params)) == 6


def test_mat_power_examples():
    x = ExactMatrix([[1, 1], [0, 1]])
    assert mat_power(x, 0) == identity(2)
    assert mat_power(jordan_block(3), 2) == elementary(3, {(1, 3): 1})
    b = Fraction(5, 3)
    x = nontransitivity_family(1, b, 2, -1, 3, 0, 7)
    assert mat_power(x, 5) == elementary(8, {(1, 8): b * b})
    with pytest.raises(DimensionError):
        mat_power(ExactMatrix([[1, 2]]), 2)


def test_determinant_and_inverse():
    g = ExactMatrix([[2, 1], [R2, I]])
    assert determinant(g) == 2 * I - R2
    assert g @ inverse(g) == identity(2)
    with pytest.raises(SingularMatrixError):
        inverse(ExactMatrix([[1, 2], [2, 4]]))


def test_jordan_type_examples():
    assert jordan_type(direct_sum([jordan_block(3), jordan_block(1)])) == Partition([3, 1])
    x = elementary(4, {(1, 2): 1, (1, 3): 1, (3, 4): 1})
    assert jordan_type(x) == Partition([3, 1])
    assert jordan_type(sp_move_witness(1, m=2).x_prime) == Partition([4, 2])
    assert jordan_type(zeros(3)) == Partition([1, 1, 1])
    with pytest.raises(NotNilpotentError):
        jordan_type(identity(2))


def test_jordan_type_matches_sequence_oracle():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 6)
        x = random_strict_upper(rng, n, density=rng.choice((0.2, 0.5, 0.9)))
        assert list(jordan_type(x)) == jordan_type_by_sequences(to_rows(x))


def test_rank_sequence_is_a_young_diagram():
    rng = random.Random(5)
    for _ in range(50):
        x = random_strict_upper(rng, rng.randint(2, 7))
        seq = rank_sequence(x)
        assert all(a >= b for a, b in zip(seq, seq[1:]))
        drops = [a - b for a, b in zip(seq, seq[1:])]
        assert all(a >= b for a, b in zip(drops, drops[1:]))


def test_conjugation():
    x = jordan_block(4)
    assert conjugate(identity(4), x) == x
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(2, 6)
        y = random_strict_upper(rng, n)
        g = random_unipotent(rng, n)
        assert jordan_type(conjugate(g, y)) == jordan_type(y)
    with pytest.raises(SingularMatrixError):
        conjugate(zeros(2), identity(2))


def test_unipotent_cleanup_moves_entry_up_and_left():
    # x is the standard [4,2,2] element of sp_8 plus a v-perturbation at (2,4) and
    # its mirror; conjugating by u clears (2,4) and deposits v at (1,3)
    kind = AlgebraKind(SP, 8)
    v = Fraction(3, 7)
    y = standard_form(kind, Partition([4, 2, 2]))
    x = y + elementary(8, {(2, 4): v, (5, 7): -v})
    assert in_lie_algebra(kind, x)
    u = identity(8) + elementary(8, {(2, 3): -v, (6, 7): v})
    assert in_group(kind, u)
    z = conjugate(u, x)
    assert z.entry(2, 4) == 0 and z.entry(5, 7) == 0
    assert z.entry(1, 3) == v
    assert in_lie_algebra(kind, z)
    assert jordan_type(z) == jordan_type(x)
    assert min(i + j for i, j in z.support() - y.support()) < 2 + 4


def test_direct_sum():
    assert direct_sum([jordan_block(2)]) == jordan_block(2)
    x = direct_sum([jordan_block(5), jordan_block(3)])
    assert x.support() == {(1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 8)}
    for a in range(1, 6):
        for b in range(1, 6):
            assert jordan_type(direct_sum([jordan_block(a), jordan_block(b)])) == Partition([a, b])


def test_shrink():
    a = ExactMatrix([[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12], [13, 14, 15, 16]])
    assert shrink(a, 1) == ExactMatrix([[6, 7], [10, 11]])
    assert shrink(a, 0) == a
    for n in range(2, 6):
        for d in range(n):
            assert shrink(omega(AlgebraKind(SP, 2 * n)), d) == omega(AlgebraKind(SP, 2 * n - 2 * d))
    with pytest.raises(DimensionError):
        shrink(a, 2)
