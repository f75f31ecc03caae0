import numpy as np
import pytest

from ringlab import build
from ringlab.core import all_ideals, as_ideal, jacobson_radical
from ringlab.predicates import (
    DECIDERS, PROPERTY_NAMES, PropertyVerdict, check_annihilator_characterization,
    check_ideal_characterization, decide, idempotent_reflexive_family, is_ideal_symmetric,
    is_left_n_reflexive_ideal, is_right_n_reflexive_ideal, replay, semicentral_sets,
)
from conftest import SMALL
from oracle import Oracle


def test_registry_is_closed():
    assert len(PROPERTY_NAMES) == 23
    assert set(PROPERTY_NAMES) == set(DECIDERS)


@pytest.mark.parametrize("expr", SMALL)
def test_deciders_match_oracle(expr):
    R = build(expr)
    o = Oracle(R)
    for prop in PROPERTY_NAMES:
        assert decide(R, prop).holds == o.decide(prop), prop


@pytest.mark.parametrize("expr", SMALL)
def test_false_verdicts_replay(expr):
    R = build(expr)
    for prop in PROPERTY_NAMES:
        v = decide(R, prop)
        assert v.holds == (v.witness is None)
        if not v.holds:
            assert replay(R, v), prop


def _least_left_n_witness(R):
    o = Oracle(R)
    for a in range(R.order):
        if not o.nil(a):
            continue
        for b in range(R.order):
            if o.xRy0(a, b) and not o.xRy0(b, a):
                return a, b


@pytest.mark.parametrize("expr", ["U(2, Zmod(2))", "D(3, Zmod(2))", "skew_trivial(truncpoly(Zmod(2), 3), alpha0)"])
def test_witness_is_lexicographically_least(expr):
    R = build(expr)
    v = decide(R, "left_n_reflexive")
    assert (v.witness["a"], v.witness["b"]) == _least_left_n_witness(R)
    r = v.witness["r"]
    assert all(R.mul[R.mul[v.witness["b"], s], v.witness["a"]] == R.zero for s in range(r))


def mat(R, rows):
    return R.index(tuple(tuple(r) for r in rows))


def test_u2_stated_witness_replays():
    R = build("U(2, Zmod(2))")
    a, b = mat(R, [[0, 1], [0, 0]]), mat(R, [[1, 1], [0, 0]])
    v = PropertyVerdict("left_n_reflexive", R.name, False, {"a": a, "b": b, "r": R.one})
    assert replay(R, v)
    assert decide(R, "two_primal").holds


def test_d3_stated_witnesses_replay():
    R = build("D(3, Zmod(2))")
    a = mat(R, [[0, 1, 1], [0, 0, 0], [0, 0, 0]])
    b = mat(R, [[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    r = mat(R, [[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    assert R.nil_mask[a]
    v = PropertyVerdict("right_n_reflexive", R.name, False, {"a": a, "b": b, "r": r})
    assert replay(R, v)
    assert not decide(R, "left_n_reflexive").holds


def test_skew_trivial_right_stated_witness():
    R = build("skew_trivial(truncpoly(Zmod(2), 3), alpha0)")
    one, zero, x = (1, 0, 0), (0, 0, 0), (0, 1, 0)
    a, b, r = R.index((zero, one)), R.index((x, zero)), R.index((one, zero))
    v = PropertyVerdict("right_n_reflexive", R.name, False, {"a": a, "b": b, "r": r})
    assert replay(R, v)
    for p in ("right_n_reflexive", "reflexive", "semiprime"):
        assert not decide(R, p).holds


def test_skew_trivial_left_fails_on_truncation():
    # (x^2, 0) is nilpotent and kills (0, 1) from the left only because x^3 = 0
    R = build("skew_trivial(truncpoly(Zmod(2), 3), alpha0)")
    v = decide(R, "left_n_reflexive")
    assert not v.holds
    assert R.label(v.witness["a"]) == "(x^2, 0)"


def test_m2_verdicts():
    R = build("M(2, Zmod(2))")
    assert decide(R, "reflexive").holds
    assert decide(R, "n_reflexive").holds
    assert decide(R, "semiprime").holds
    v = decide(R, "reversible")
    assert not v.holds and replay(R, v)
    assert not decide(R, "two_primal").holds
    assert decide(R, "right_pq_baer").holds and decide(R, "left_pq_baer").holds


def test_z4_verdicts():
    R = build("Zmod(4)")
    assert decide(R, "left_n_reflexive").holds and decide(R, "weakly_reflexive").holds
    v = decide(R, "semiprime")
    assert v.witness == {"a": 2}
    # r(2 Z_4) = {0, 2} is not generated by an idempotent
    assert not decide(R, "right_pq_baer").holds


def test_z6_reduced_family():
    R = build("Zmod(6)")
    for p in ("reversible", "n_reversible", "symmetric", "semicommutative", "nil_semicommutative"):
        assert decide(R, p).holds


def test_semicentral_u2():
    R = build("U(2, Zmod(2))")
    sl, sr, b = semicentral_sets(R)
    assert sl != b and sr != b
    assert set(b.members) == {R.zero, R.one}
    assert len(sl) == 4 and len(sr) == 4


def test_idempotent_family_domains():
    R = build("D(3, Zmod(2))")
    assert idempotent_reflexive_family(R, "left_n_right_idempotent_reflexive").holds
    with pytest.raises(KeyError):
        idempotent_reflexive_family(R, "bogus")


@pytest.mark.parametrize("expr,expected", [("Zmod(4)", True), ("U(2, Zmod(2))", False),
                                           ("M(2, Zmod(2))", True), ("D(3, Zmod(2))", False)])
def test_ideal_characterization(expr, expected):
    R = build(expr)
    v = check_ideal_characterization(R)
    assert v.holds
    assert set(v.details.values()) == {expected}


@pytest.mark.parametrize("expr,expected", [("M(2, Zmod(2))", True), ("D(3, Zmod(2))", False), ("Zmod(4)", True)])
def test_annihilator_characterization(expr, expected):
    v = check_annihilator_characterization(build(expr))
    assert v.holds and set(v.details.values()) == {expected}
    if not expected:
        assert v.witness is not None


def test_ideal_level_whole_ring():
    for expr in ("U(2, Zmod(2))", "D(3, Zmod(2))", "Zmod(8)"):
        R = build(expr)
        whole = as_ideal(R, range(R.order))
        assert is_left_n_reflexive_ideal(R, whole).holds
        assert is_right_n_reflexive_ideal(R, whole).holds
        assert is_ideal_symmetric(R, whole).holds


def _triple_oracle(R, I):
    """aRbRc in I => aRcRb in I over all element triples."""
    n = R.order
    M = R.mul
    inside = I.mask
    def sand(a, b, c):
        return all(inside[M[M[M[M[a, r], b], s], c]] for r in range(n) for s in range(n))
    return all(not sand(a, b, c) or sand(a, c, b) for a in range(n) for b in range(n) for c in range(n))


@pytest.mark.parametrize("expr", ["U(2, Zmod(2))", "D(3, Zmod(2))", "Zmod(4)", "S1(Zmod(2))"])
def test_ideal_symmetric_matches_elementwise(expr):
    R = build(expr)
    for I in all_ideals(R):
        v = is_ideal_symmetric(R, I)
        assert v.holds == _triple_oracle(R, I)


def test_left_n_reflexive_ideal_matches_zero_ideal():
    for expr in SMALL[:12]:
        R = build(expr)
        zero = as_ideal(R, [R.zero])
        assert is_left_n_reflexive_ideal(R, zero).holds == decide(R, "left_n_reflexive").holds
        assert is_right_n_reflexive_ideal(R, zero).holds == decide(R, "right_n_reflexive").holds


def test_verdict_serialisation():
    R = build("U(2, Zmod(2))")
    d = decide(R, "left_n_reflexive").to_dict(R, timings=False)
    assert d["holds"] is False and d["order"] == 8
    assert [w["role"] for w in d["witness"]] == ["a", "b", "r"]
    assert d["witness"][0]["display"] == "[[0,1],[0,0]]"
    assert "elapsed_ms" not in d
