import random
from fractions import Fraction

import pytest

from nilaccess import (
    GL,
    SL,
    SP,
    AlgebraKind,
    Cocharacter,
    DimensionError,
    ExactMatrix,
    Parabolic,
    SingularMatrixError,
    cochar_in_group,
    conjugate,
    direct_sum,
    elementary,
    fixes,
    identity,
    in_lie_algebra,
    jordan_block,
    jordan_type,
    limit,
    normalize_to_sl,
    parabolic_membership,
    Partition,
    zeros,
)
from nilaccess.suite import random_sp_element


def random_matrix(rng, n, bound=3):
    return ExactMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def random_weights(rng, n):
    return Cocharacter(rng.randint(-2, 2) for _ in range(n))


def prune(x, lam):
    """Zero the entries that would make the limit diverge."""
    w = lam.weights
    return x.replace({(i, j): 0 for i, j in x.support() if w[i - 1] < w[j - 1]})


def test_text_forms():
    lam = Cocharacter.parse("1,1,0,0")
    assert str(lam) == "1,1,0,0"
    assert Cocharacter.blocks((1, 2), (0, 2)) == lam
    assert Cocharacter.parse("[2, -1]").weights == (2, -1)
    with pytest.raises(DimensionError):
        Cocharacter([])


def test_group_membership():
    assert cochar_in_group(AlgebraKind(SP, 4), Cocharacter([1, 2, -2, -1]))
    assert not cochar_in_group(AlgebraKind(SP, 4), Cocharacter([1, 2, -1, -1]))
    assert not cochar_in_group(AlgebraKind(SL, 3), Cocharacter([1, 0, 0]))
    assert cochar_in_group(AlgebraKind(GL, 3), Cocharacter([5, -7, 2]))
    with pytest.raises(DimensionError):
        cochar_in_group(AlgebraKind(GL, 3), Cocharacter([1, 2]))


def test_group_membership_agrees_with_evaluation():
    from nilaccess import in_group

    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 3)
        kind = AlgebraKind(SP, 2 * n)
        lam = random_weights(rng, 2 * n)
        assert cochar_in_group(kind, lam) == in_group(kind, lam.evaluate(2))


def test_limit_examples():
    x = elementary(4, {(1, 2): 1, (1, 3): 1, (3, 4): 1})
    y = limit(Cocharacter([1, 1, 0, 0]), x)
    assert y == elementary(4, {(1, 2): 1, (3, 4): 1})
    assert jordan_type(y) == Partition([2, 2])
    assert limit(Cocharacter([0, 0, 0, 0]), x) == x
    assert limit(Cocharacter([1, -1]), elementary(2, {(2, 1): 1})) is None
    with pytest.raises(DimensionError):
        limit(Cocharacter([1, 0]), identity(3))


def test_limit_matches_explicit_conjugation():
    # lambda(t) x lambda(t)^-1 has entry x_ij t^(w_i - w_j); check at t = 1/7
    rng = random.Random(9)
    t = Fraction(1, 7)
    for _ in range(30):
        n = rng.randint(1, 5)
        lam = random_weights(rng, n)
        x = random_matrix(rng, n)
        moved = conjugate(lam.evaluate(t), x)
        w = lam.weights
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert moved.entry(i, j) == x.entry(i, j) * t ** (w[i - 1] - w[j - 1])


def test_fixes():
    assert fixes(Cocharacter([3, -1]), zeros(2))
    y = direct_sum([jordan_block(2), jordan_block(2)])
    assert fixes(Cocharacter([1, 1, -1, -1]), y)
    assert not fixes(Cocharacter([1, 0, 0, 0]), y)


def test_limit_properties():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 5)
        lam = random_weights(rng, n)
        x = prune(random_matrix(rng, n), lam)
        y = limit(lam, x)
        assert y is not None
        assert fixes(lam, y)
        assert limit(lam, y) == y
        assert limit(normalize_to_sl(lam), x) == y


def test_normalize_to_sl():
    assert normalize_to_sl(Cocharacter([2, 1, 0])).weights == (3, 0, -3)
    assert normalize_to_sl(Cocharacter([1, -1])).weights == (2, -2)
    rng = random.Random(3)
    for _ in range(50):
        lam = random_weights(rng, rng.randint(1, 6))
        assert sum(normalize_to_sl(lam).weights) == 0
        assert cochar_in_group(AlgebraKind(SL, len(lam)), normalize_to_sl(lam))
        x = random_matrix(rng, len(lam), bound=1)
        assert limit(normalize_to_sl(lam), x) == limit(lam, x)


def test_limits_stay_in_sp():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(1, 4)
        kind = AlgebraKind(SP, 2 * n)
        half = [rng.randint(-2, 2) for _ in range(n)]
        lam = Cocharacter(half + [-v for v in reversed(half)])
        x = prune(random_sp_element(rng, 2 * n), lam)
        assert in_lie_algebra(kind, x)
        assert in_lie_algebra(kind, limit(lam, x))


def test_parabolic_membership():
    lam = Cocharacter([2, 1, 0])
    assert parabolic_membership(lam, identity(3)) == {Parabolic.P, Parabolic.L, Parabolic.U}
    u = elementary(3, {(1, 1): 1, (2, 2): 1, (3, 3): 1, (1, 2): 4, (2, 3): -1})
    assert parabolic_membership(lam, u) == {Parabolic.P, Parabolic.U}
    swap = elementary(3, {(1, 2): 1, (2, 1): 1, (3, 3): 1})
    assert parabolic_membership(lam, swap) == {Parabolic.OUTSIDE}
    levi = elementary(3, {(1, 1): 2, (2, 2): 1, (3, 3): 1})
    assert parabolic_membership(lam, levi) == {Parabolic.P, Parabolic.L}
    with pytest.raises(SingularMatrixError):
        parabolic_membership(lam, zeros(3))


def test_levi_equivariance():
    rng = random.Random(6)
    lam = Cocharacter([1, 1, 0, 0, -1])
    for _ in range(30):
        # block-diagonal g inside the Levi of lam
        a = ExactMatrix([[1, rng.randint(-2, 2)], [0, 1]])
        b = ExactMatrix([[1, 0], [rng.randint(-2, 2), 1]])
        g = direct_sum([a, b, ExactMatrix([[rng.choice((1, 2, -3))]])])
        assert Parabolic.L in parabolic_membership(lam, g)
        x = prune(random_matrix(rng, 5), lam)
        assert limit(lam, conjugate(g, x)) == conjugate(g, limit(lam, x))


def test_shrink_and_evaluate():
    lam = Cocharacter([3, 1, -1, -3])
    assert lam.shrink(1).weights == (1, -1)
    assert lam.shrink(0) is lam
    with pytest.raises(DimensionError):
        lam.shrink(2)
    assert lam.evaluate(2) == elementary(4, {(1, 1): 8, (2, 2): 2, (3, 3): Fraction(1, 2), (4, 4): Fraction(1, 8)})
