"""Compare the numba and numpy kernel backends.

Each backend runs in its own interpreter because the backend is fixed at
import time by RINGLAB_BACKEND.  The first call per kernel is timed
separately (the "1st+" column, extra cost of the first call) so numba compile
or cache-load time does not pollute the steady-state median.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

RINGS = ("U(3, Zmod(2))", "D(3, Zmod(4))", "M(2, Zmod(4))", "H(1, 0, Zmod(4))")
QA_ORDER_CAP = 16   # the degree-1 pair scan is order^4; keep it to small rings
QA_RINGS = ("U(2, Zmod(2))", "D(2, Zmod(4))", "Zmod(16)")


def _worker(repeat: int) -> dict:
    import numpy as np

    from ringlab import build, kernels
    from ringlab.predicates import zero_sandwich

    impl = kernels.numba_impl or kernels.numpy_impl
    out = {"backend": kernels.BACKEND, "rings": {}}
    for expr in RINGS + QA_RINGS:
        R = build(expr, validate=False)
        mul = np.ascontiguousarray(R.mul, dtype=np.int64)
        add = np.ascontiguousarray(R.add, dtype=np.int64)
        rows = np.arange(R.order, dtype=np.int64)
        nil = np.ascontiguousarray(impl.nilpotent_mask(mul, R.zero))
        zl = np.ascontiguousarray(zero_sandwich(R))
        jobs = {
            "associativity": lambda: impl.first_assoc_violation(mul),
            "left_distributivity": lambda: impl.first_left_distrib_violation(mul, add),
            "nilpotent_mask": lambda: impl.nilpotent_mask(mul, R.zero),
            "sandwich_left_nil": lambda: impl.sandwich_left(mul, nil, rows),
            "symmetric_scan": lambda: impl.first_symmetric_violation(mul, R.zero),
        }
        if R.order <= QA_ORDER_CAP:
            jobs["quasi_armendariz_D1"] = lambda: impl.qa_first_violation(mul, add, R.zero, zl, 1)
        if expr in QA_RINGS:
            jobs = {k: v for k, v in jobs.items() if k == "quasi_armendariz_D1"}
        row = {}
        for name, fn in jobs.items():
            t0 = time.perf_counter()
            fn()
            first = time.perf_counter() - t0
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                fn()
                times.append(time.perf_counter() - t0)
            row[name] = {"first_s": first, "median_s": statistics.median(times)}
        out["rings"][f"{expr} [order {R.order}]"] = row
    return out


def _run(backend: str, repeat: int) -> dict:
    env = dict(os.environ, RINGLAB_BACKEND=backend)
    proc = subprocess.run([sys.executable, __file__, "--worker", "--repeat", str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        print(json.dumps(_worker(args.repeat)))
        return 0
    nb, np_ = _run("numba", args.repeat), _run("numpy", args.repeat)
    if args.json:
        print(json.dumps({"numba": nb, "numpy": np_}, indent=2))
        return 0
    if nb["backend"] != "numba":
        print("numba failed to import; both runs used numpy")
    print(f"{'ring / kernel':48s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s} {'1st+ ms':>8s}")
    for ring, row in nb["rings"].items():
        print(ring)
        for kernel, t in row.items():
            a, b = t["median_s"] * 1e3, np_["rings"][ring][kernel]["median_s"] * 1e3
            jit = max(t["first_s"] - t["median_s"], 0.0) * 1e3
            print(f"  {kernel:46s} {a:10.3f} {b:10.3f} {b / max(a, 1e-9):7.1f}x {jit:8.0f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
