import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringlab import build
from ringlab.errors import BoundExceeded, RingMismatch
from ringlab.polybox import (
    BoundedPoly, is_nilpotent_poly, is_quasi_armendariz_bounded, nilpotent_coeffs_condition,
    poly_add, poly_annihilates, poly_mul, polynomial_left_n_reflexive,
)


def mat(R, rows):
    return R.index(tuple(tuple(r) for r in rows))


@pytest.fixture(scope="module")
def d2z4():
    R = build("D(2, Zmod(4))")
    f = BoundedPoly.of(R, [mat(R, [[0, 1], [0, 0]]), mat(R, [[2, 1], [0, 2]])], 4)
    g = BoundedPoly.of(R, [mat(R, [[0, 1], [0, 0]]), mat(R, [[2, 3], [0, 2]])], 4)
    return R, f, g


def test_square_of_one_plus_x():
    Z2 = build("Zmod(2)")
    f = BoundedPoly.of(Z2, [1, 1], 4)
    p, flag = poly_mul(f, f)
    assert p.coeffs == (1, 0, 1) and not flag


def test_truncation_flag():
    Z3 = build("Zmod(3)")
    xD = BoundedPoly.of(Z3, [0, 0, 1], 2)
    x = BoundedPoly.of(Z3, [0, 1], 2)
    p, flag = poly_mul(xD, x)
    assert p.is_zero() and flag
    ok, flag = is_nilpotent_poly(x, power_cap=4)
    assert not ok and flag                     # inconclusive, not a false claim


def test_normalisation_and_mismatch():
    Z2 = build("Zmod(2)")
    assert BoundedPoly.of(Z2, [1, 0, 0], 2).degree == 0
    with pytest.raises(BoundExceeded):
        BoundedPoly.of(Z2, [1, 1, 1, 1], 2)
    with pytest.raises(RingMismatch):
        poly_mul(BoundedPoly.of(Z2, [1], 2), BoundedPoly.of(build("Zmod(3)"), [1], 2))


def test_stated_pair_annihilates(d2z4):
    R, f, g = d2z4
    p, flag = poly_mul(f, g)
    assert p.is_zero() and not flag
    assert poly_annihilates(f, g)
    assert poly_annihilates(f, g, middle_degree=2)
    a1, b0 = f.coeffs[1], g.coeffs[0]
    assert any(R.mul[R.mul[a1, r], b0] != R.zero for r in range(R.order))


def test_zero_annihilates(d2z4):
    R, f, g = d2z4
    assert poly_annihilates(BoundedPoly.of(R, [], 4), g)


def test_middle_degree_guard(d2z4):
    R, f, g = d2z4
    with pytest.raises(BoundExceeded):
        poly_annihilates(f, g, middle_degree=3)


def test_quasi_armendariz(d2z4):
    R, f, g = d2z4
    v = is_quasi_armendariz_bounded(R, 1)
    assert not v.holds and v.bounds["degree"] == 1
    F = BoundedPoly.of(R, v.witness["f"], 4)
    G = BoundedPoly.of(R, v.witness["g"], 4)
    assert poly_annihilates(F, G)
    assert any(R.mul[R.mul[v.witness["a"], r], v.witness["b"]] != R.zero for r in range(R.order))
    assert is_quasi_armendariz_bounded(build("U(2, Zmod(2))"), 1).holds
    for D in (1, 2, 3):
        assert is_quasi_armendariz_bounded(build("Zmod(2)"), D).holds


def test_m2_nilpotent_polynomial():
    M = build("M(2, Zmod(2))")
    e = lambda i, j: mat(M, [[int((r, c) == (i, j)) for c in range(2)] for r in range(2)])
    diff = M.sub(e(0, 0), e(1, 1))
    minus_e12 = M.neg[e(0, 1)]
    f = BoundedPoly.of(M, [e(1, 0), diff, minus_e12], 4)
    sq, flag = poly_mul(f, f)
    assert sq.is_zero() and not flag
    assert is_nilpotent_poly(f)[0]
    assert not M.nil_mask[diff]


def test_m2_over_z3_nilpotent_polynomial():
    # the identity is independent of the base ring; over Z_3, e11 - e22 != identity
    M = build("M(2, Zmod(3))")
    e = lambda i, j: mat(M, [[int((r, c) == (i, j)) for c in range(2)] for r in range(2)])
    f = BoundedPoly.of(M, [e(1, 0), M.sub(e(0, 0), e(1, 1)), M.neg[e(0, 1)]], 4)
    assert poly_mul(f, f)[0].is_zero()


def test_nilpotent_coeffs_condition():
    M = build("M(2, Zmod(2))")
    v = nilpotent_coeffs_condition(M, 2)
    assert not v.holds and not M.nil_mask[v.witness["a"]]
    assert is_nilpotent_poly(BoundedPoly.of(M, v.witness["f"], 8), 4)[0]
    assert nilpotent_coeffs_condition(build("Zmod(4)"), 2).holds
    assert nilpotent_coeffs_condition(build("Zmod(6)"), 2).holds


def test_polynomial_left_n_reflexive():
    assert polynomial_left_n_reflexive(build("Zmod(4)")).holds
    v = polynomial_left_n_reflexive(build("U(2, Zmod(2))"))
    assert not v.holds


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 7), min_size=0, max_size=2), min_size=3, max_size=3))
def test_mul_associative_distributive_when_exact(cs):
    R = build("U(2, Zmod(2))")
    f, g, h = (BoundedPoly.of(R, c, 6) for c in cs)
    fg, t1 = poly_mul(f, g)
    gh, t2 = poly_mul(g, h)
    left, t3 = poly_mul(fg, h)
    right, t4 = poly_mul(f, gh)
    if not (t1 or t2 or t3 or t4):
        assert left == right
    lhs, t5 = poly_mul(f, poly_add(g, h))
    a, t6 = poly_mul(f, g)
    b, t7 = poly_mul(f, h)
    if not (t5 or t6 or t7):
        assert lhs == poly_add(a, b)


def test_commutative_nilpotent_polys_have_nilpotent_coeffs():
    from ringlab.polybox import _enumerate, _nilpotent_rows
    R = build("Zmod(8)")
    F = _enumerate(R, 2)
    nil = _nilpotent_rows(R, F, 4)
    assert R.nil_mask[F[nil]].all()
