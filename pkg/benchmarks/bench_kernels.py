"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one workload on both backends and checks they return the
same result.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from retic import _fallback
from retic.algebra import direct_product
from retic.io import load

try:
    from retic import _kernels
except ImportError:  # extension not built
    _kernels = None


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads():
    c8 = load("c8")
    m5 = load("m5")
    p = load("lattice-p")
    pp = direct_product(p, p)
    cc = direct_product(c8, c8)
    rng = np.random.default_rng(7)

    def cg_all(alg):
        seeds = [np.array([[a, b]], dtype=np.int32) for a in range(alg.n) for b in range(a + 1, alg.n)]
        return lambda mod: [mod.cg_closure(alg.flat_tables(), alg.arities, alg.n, s) for s in seeds]

    def sub(alg, k, gens):
        g = np.asarray(gens, dtype=np.int32)
        return lambda mod: [mod.subuniverse_closure(alg.flat_tables(), alg.arities, alg.n, k, g)]

    yield "Cg of all pairs, C8", cg_all(c8)
    yield "Cg of all pairs, C8×C8", cg_all(cc)
    yield "Cg of all pairs, P×P", cg_all(pp)
    yield "closure in M⁴", sub(m5, 4, [[0, 1, 0, 1], [2, 2, 3, 3], [4, 3, 4, 3], [1, 0, 2, 4]])
    yield "closure in C8⁴", sub(c8, 4, rng.integers(0, 8, size=(3, 4)))
    yield "closure in (C8×C8)³", sub(cc, 3, rng.integers(0, 64, size=(2, 3)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not available; nothing to compare")
        return 1
    print(f"{'workload':34} {'cython':>10} {'python':>10} {'speedup':>8}  same")
    for name, run in workloads():
        tc, rc = _time(lambda: run(_kernels), args.repeat)
        tp, rp = _time(lambda: run(_fallback), args.repeat)
        same = all(np.array_equal(a, b) for a, b in zip(rc, rp))
        print(f"{name:34} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x  {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
