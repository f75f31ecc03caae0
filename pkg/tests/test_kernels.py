"""The numba and numpy kernels must agree exactly, witnesses included."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringlab import build, kernels
from ringlab.predicates import zero_sandwich
from conftest import SMALL

pytestmark = pytest.mark.skipif(kernels.numba_impl is None, reason="numba backend disabled")

NB, NP = kernels.numba_impl, kernels.numpy_impl
RINGS = SMALL + ["M(2, Zmod(3))", "U(3, Zmod(2))"]


def i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


@pytest.mark.parametrize("expr", RINGS)
def test_ring_kernels_agree(expr):
    R = build(expr)
    mul, add = i64(R.mul), i64(R.add)
    rows = np.arange(R.order, dtype=np.int64)
    assert tuple(NB.first_assoc_violation(mul)) == tuple(NP.first_assoc_violation(mul))
    assert tuple(NB.first_left_distrib_violation(mul, add)) == tuple(NP.first_left_distrib_violation(mul, add))
    assert (NB.nilpotent_mask(mul, R.zero) == NP.nilpotent_mask(mul, R.zero)).all()
    for target in (np.arange(R.order) == R.zero, R.nil_mask):
        t = np.ascontiguousarray(target)
        assert (NB.sandwich_left(mul, t, rows) == NP.sandwich_left(mul, t, rows)).all()
        assert (NB.sandwich_right(mul, t, rows) == NP.sandwich_right(mul, t, rows)).all()
    assert tuple(NB.first_symmetric_violation(mul, R.zero)) == tuple(NP.first_symmetric_violation(mul, R.zero))


@pytest.mark.parametrize("expr", ["U(2, Zmod(2))", "D(3, Zmod(2))", "Zmod(8)", "S2(Zmod(2))"])
def test_triple_and_closure_agree(expr):
    R = build(expr)
    mul, add = i64(R.mul), i64(R.add)
    target = np.ascontiguousarray(R.nil_mask)
    sand = np.ascontiguousarray(NP.sandwich_left(mul, target, np.arange(R.order, dtype=np.int64)))
    reps = np.arange(R.order, dtype=np.int64)
    assert (NB.triple_sandwich(mul, target, sand, reps) == NP.triple_sandwich(mul, target, sand, reps)).all()
    seed = np.zeros(R.order, dtype=np.bool_)
    seed[[0, R.order - 1]] = True
    assert (NB.additive_closure(add, seed) == NP.additive_closure(add, seed)).all()


@pytest.mark.parametrize("expr,degree", [("D(2, Zmod(4))", 1), ("U(2, Zmod(2))", 1), ("Zmod(4)", 2), ("M(2, Zmod(2))", 1)])
def test_qa_kernel_agrees(expr, degree):
    R = build(expr)
    zl = np.ascontiguousarray(zero_sandwich(R))
    a = NB.qa_first_violation(i64(R.mul), i64(R.add), R.zero, zl, degree)
    b = NP.qa_first_violation(i64(R.mul), i64(R.add), R.zero, zl, degree)
    assert tuple(int(v) for v in a) == tuple(int(v) for v in b)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)
                                 .map(lambda xs: np.array(xs, dtype=np.int64).reshape(n, n))))
def test_random_tables_agree(table):
    n = table.shape[0]
    assert tuple(NB.first_assoc_violation(table)) == tuple(NP.first_assoc_violation(table))
    add = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    assert tuple(NB.first_left_distrib_violation(table, i64(add))) == tuple(NP.first_left_distrib_violation(table, i64(add)))
    assert tuple(NB.first_right_distrib_violation(table, i64(add))) == tuple(NP.first_right_distrib_violation(table, i64(add)))
    assert (NB.nilpotent_mask(table, 0) == NP.nilpotent_mask(table, 0)).all()
    assert tuple(NB.first_symmetric_violation(table, 0)) == tuple(NP.first_symmetric_violation(table, 0))


def test_backend_flag_values():
    assert kernels.BACKEND in ("numba", "numpy")
    assert set(kernels.KERNELS) <= set(dir(NB)) and set(kernels.KERNELS) <= set(dir(NP))


def test_numpy_backend_subprocess():
    import json, os, subprocess, sys
    code = "from ringlab import kernels, build, decide; import json; " \
           "R = build('D(3, Zmod(2))'); print(json.dumps([kernels.BACKEND, decide(R, 'left_n_reflexive').witness]))"
    env = dict(os.environ, RINGLAB_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, witness = json.loads(out.stdout)
    assert backend == "numpy"
    R = build("D(3, Zmod(2))")
    from ringlab import decide
    assert witness == decide(R, "left_n_reflexive").witness
    env["RINGLAB_BACKEND"] = "cuda"
    bad = subprocess.run([sys.executable, "-c", "import ringlab"], env=env, capture_output=True, text=True)
    assert bad.returncode != 0 and "RINGLAB_BACKEND" in bad.stderr
