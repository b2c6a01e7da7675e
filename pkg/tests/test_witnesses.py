import dataclasses
import itertools
import json
from fractions import Fraction

import pytest

from nilaccess import (
    GL,
    SP,
    AlgebraKind,
    Cocharacter,
    Partition,
    WitnessConstructionError,
    WitnessParameterError,
    accessible,
    distinguished_obstruction_check,
    dominance_le,
    gl_example_31,
    gl_move_I_witness,
    gl_move_II_witness,
    gl_rst_witness,
    gl_two_part_witness,
    in_lie_algebra,
    jordan_type,
    mat_power,
    nontransitivity_check,
    o_move1_example,
    o_move1_witness,
    sp_move_witness,
    verify_witness,
)
from nilaccess.witnesses import WITNESS_BUILDERS, nontransitivity_family
from oracles import jordan_type_by_sequences, to_rows

P = Partition


def rational(w):
    return all(e.is_rational() for row in w.x_prime.rows for e in row)


def check_with_oracle(w):
    """Source and limit types recomputed by the independent sequence oracle."""
    assert verify_witness(w).passed
    if rational(w):
        assert jordan_type_by_sequences(to_rows(w.x_prime)) == list(w.source)
        assert jordan_type_by_sequences(to_rows(w.limit())) == list(w.target)
    assert dominance_le(w.target, w.source) and w.target != w.source
    assert accessible(w.kind, w.source, w.target)


def test_gl_two_part_examples():
    w = gl_two_part_witness(2, 3, 2)
    assert (w.source, w.target) == (P([4, 1]), P([3, 2]))
    check_with_oracle(w)
    with pytest.raises(WitnessParameterError):
        gl_two_part_witness(1, 3, 1)
    with pytest.raises(WitnessParameterError):
        gl_two_part_witness(3, 4, 1)


def test_gl_move_examples():
    w = gl_move_I_witness([4, 4], [1, 1], 3)
    assert (w.source, w.target) == (P([5, 5, 1]), P([4, 4, 3]))
    check_with_oracle(w)
    w = gl_move_II_witness(4, [3, 3], [1, 1])
    assert (w.source, w.target) == (P([6, 2, 2]), P([4, 3, 3]))
    check_with_oracle(w)
    with pytest.raises(WitnessParameterError):
        gl_move_I_witness([2, 2], [1, 1], 4)
    with pytest.raises(WitnessParameterError):
        gl_move_II_witness(2, [3, 3], [1, 1])


def test_gl_rst_routing():
    w = gl_rst_witness(3, 3, 2, 1, 1)
    assert (w.source, w.target) == (P([4, 3, 1]), P([3, 3, 2]))
    w = gl_rst_witness(4, 4, 3, 1, 2)
    assert "move I" in w.provenance
    w = gl_rst_witness(4, 3, 2, 2, 1)
    assert "move II" in w.provenance


def test_gl_grid_with_oracle():
    built = 0
    for r, s, k in itertools.product(range(1, 6), repeat=3):
        try:
            w = gl_two_part_witness(r, s, k)
        except WitnessParameterError:
            continue
        check_with_oracle(w)
        built += 1
    assert built > 10


def test_gl_example():
    w = gl_example_31()
    assert jordan_type(w.x_prime) == P([3, 1])
    assert jordan_type(w.limit()) == P([2, 2])
    assert w.lam == Cocharacter([1, 1, 0, 0])


@pytest.mark.parametrize(
    "move, params, source, target",
    [
        (1, {"m": 2}, [4, 2], [3, 3]),
        (2, {"n": 3, "m": 1}, [6, 1, 1], [4, 2, 2]),
        (3, {"n": 4, "m": 1}, [4, 4, 2], [4, 3, 3]),
        (4, {"n": 3, "m": 1}, [3, 3, 1, 1], [2, 2, 2, 2]),
    ],
)
def test_sp_examples(move, params, source, target):
    w = sp_move_witness(move, **params)
    assert (w.source, w.target) == (P(source), P(target))
    assert w.kind.tag == SP
    check_with_oracle(w)


def test_sp_move1_shape():
    m = 3
    w = sp_move_witness(1, m=m)
    assert w.x_prime.entry(1, 2 * m) == 1
    assert w.x_prime.entry(2 * m - 1, 4 * m - 2) == 1
    assert w.lam.weights == (1,) * 5 + (-1,) * 5


def test_sp_bad_parameters():
    with pytest.raises(WitnessParameterError):
        sp_move_witness(5, m=2)
    with pytest.raises(WitnessParameterError):
        sp_move_witness(1, n=2)
    with pytest.raises(WitnessParameterError):
        sp_move_witness(1, m=1)


def test_move4_connector_sign_is_forced():
    # flipping the mirrored connector back to +1 leaves the Lie algebra
    for n, m in ((3, 1), (4, 1), (4, 2)):
        w = sp_move_witness(4, n=n, m=m)
        pos = (m + 2 * n - 1, 2 * m + 2 * n)
        assert w.x_prime.entry(*pos) == -1
        flipped = dataclasses.replace(w, x_prime=w.x_prime.replace({pos: 1}))
        assert not in_lie_algebra(w.kind, flipped.x_prime)
        assert "in_lie_algebra" in verify_witness(flipped).failures


def test_o_witnesses():
    ex = o_move1_example()
    assert jordan_type(ex.x_prime) == P([7, 5])
    assert jordan_type(ex.limit()) == P([6, 6])
    assert o_move1_witness(3).x_prime == ex.x_prime
    assert (o_move1_witness(2).source, o_move1_witness(2).target) == (P([5, 3]), P([4, 4]))
    assert (o_move1_witness(4).source, o_move1_witness(4).target) == (P([9, 7]), P([8, 8]))
    for m in (2, 3, 4):
        check_with_oracle(o_move1_witness(m))


def test_tampered_witness_fails():
    w = sp_move_witness(2, n=3, m=1)
    i, j = sorted(w.x_prime.support())[0]
    bad = dataclasses.replace(w, x_prime=w.x_prime.replace({(i, j): 0}))
    rep = verify_witness(bad)
    assert not rep.passed and rep.failures
    assert rep.summary().startswith("FAIL")
    lam = list(w.lam.weights)
    lam[0] += 1
    rep = verify_witness(dataclasses.replace(w, lam=Cocharacter(lam)))
    assert "cochar_in_group" in rep.failures


def test_witness_json():
    w = sp_move_witness(1, m=2)
    data = json.loads(w.to_json())
    assert data["source"] == "[4,2]" and data["kind"] == "sp" and data["N"] == 6
    assert data["verification"]["passed"] is True
    assert len(data["weights"]) == 6


def test_nontransitivity_family():
    x = nontransitivity_family(*([0] * 7))
    assert jordan_type(x) == P([4, 2, 1, 1])
    x = nontransitivity_family(1, 0, 2, 3, -1, 1, 5)
    assert mat_power(x, 5).is_zero()
    assert max(jordan_type(x)) < 6
    x = nontransitivity_family(Fraction(1, 2), 3, 0, 1, 1, -2, 4)
    assert len(jordan_type(x)) == 2


def test_nontransitivity_check():
    rep = nontransitivity_check(200, seed=0)
    assert rep.passed
    assert rep.details["rank_6"] == "200/200"
    with pytest.raises(ValueError):
        nontransitivity_check(0)


def test_distinguished_obstruction():
    sp6, sp8 = AlgebraKind(SP, 6), AlgebraKind(SP, 8)
    assert distinguished_obstruction_check(sp6, P([6]), P([4, 2])).details["fires"]
    assert distinguished_obstruction_check(sp8, P([8]), P([6, 2])).details["fires"]
    rep = distinguished_obstruction_check(sp8, P([8]), P([4, 4]))
    assert not rep.details["fires"] and rep.details["accessible"] and rep.passed
    with pytest.raises(ValueError):
        distinguished_obstruction_check(sp6, P([5, 1]), P([4, 2]))


SAMPLE_PARAMS = {
    "gl-two-part": {"r": "2", "s": "3", "k": "2"},
    "gl-move-I": {"r_list": "4,4", "k_list": "1,1", "s": "3"},
    "gl-move-II": {"r": "4", "s_list": "3,3", "k_list": "1,1"},
    "gl-rst": {"r": "3", "s": "3", "t": "2", "k": "1", "l": "1"},
    "gl-example": {},
    "sp-move1": {"m": "2"},
    "sp-move2": {"n": "3", "m": "1"},
    "sp-move3": {"n": "4", "m": "1"},
    "sp-move4": {"n": "3", "m": "1"},
    "o-move1-example": {},
    "o-move1": {"m": "2"},
}


def test_builder_table():
    assert set(WITNESS_BUILDERS) == set(SAMPLE_PARAMS)
    for name, (build, names) in WITNESS_BUILDERS.items():
        assert set(names) == set(SAMPLE_PARAMS[name])
        assert verify_witness(build(SAMPLE_PARAMS[name])).passed
    assert WITNESS_BUILDERS["gl-example"][0]({}).kind == AlgebraKind(GL, 4)


def test_construction_error_is_raised_not_returned(monkeypatch):
    import nilaccess.witnesses as wmod

    monkeypatch.setattr(wmod, "in_lie_algebra", lambda kind, x: False)
    with pytest.raises(WitnessConstructionError):
        wmod.sp_move_witness(1, m=2)
