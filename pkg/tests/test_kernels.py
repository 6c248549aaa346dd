import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_cg
from retic import _fallback, kernels
from retic.algebra import generate_subuniverse
from retic.io import load
from strategies import algebras

try:
    from retic import _kernels
except ImportError:
    _kernels = None

BACKENDS = [_fallback] + ([_kernels] if _kernels is not None else [])


def _seed_pairs(alg, data):
    k = data.draw(st.integers(1, 3))
    return np.array(data.draw(st.lists(st.tuples(st.integers(0, alg.n - 1), st.integers(0, alg.n - 1)),
                                       min_size=k, max_size=k)), dtype=np.int32)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=60, deadline=None)
@given(alg=algebras(), data=st.data())
def test_cg_closure_matches_brute_force(mod, alg, data):
    seeds = _seed_pairs(alg, data)
    rep = mod.cg_closure(alg.flat_tables(), alg.arities, alg.n, seeds)
    assert tuple(int(v) for v in rep) == brute_cg(alg, seeds.tolist()).rep


def _brute_subuniverse(alg, k, gens):
    found = {tuple(g) for g in gens}
    for (_, a), tab in zip(alg.signature, alg.tables):
        if a == 0:
            found.add((int(tab),) * k)
    while True:
        fresh = set()
        for (_, a), tab in zip(alg.signature, alg.tables):
            if a == 0:
                continue
            for args in itertools.product(sorted(found), repeat=a):
                fresh.add(tuple(int(tab[tuple(col)]) for col in zip(*args)))
        if fresh <= found:
            return found
        found |= fresh


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=40, deadline=None)
@given(alg=algebras(max_n=3), data=st.data())
def test_subuniverse_closure_matches_brute_force(mod, alg, data):
    k = data.draw(st.integers(1, 3))
    gens = data.draw(st.lists(st.lists(st.integers(0, alg.n - 1), min_size=k, max_size=k), min_size=1, max_size=2))
    got = mod.subuniverse_closure(alg.flat_tables(), alg.arities, alg.n, k, np.array(gens, dtype=np.int32))
    assert {tuple(int(v) for v in row) for row in got} == _brute_subuniverse(alg, k, gens)


@pytest.mark.skipif(_kernels is None, reason="compiled extension not built")
@pytest.mark.parametrize("name", ["c8", "s3", "m5", "n5x", "lattice-p"])
def test_backends_agree_on_fixtures(name):
    alg = load(name)
    for a in range(alg.n):
        for b in range(a + 1, alg.n):
            seed = np.array([[a, b]], dtype=np.int32)
            x = _kernels.cg_closure(alg.flat_tables(), alg.arities, alg.n, seed)
            y = _fallback.cg_closure(alg.flat_tables(), alg.arities, alg.n, seed)
            assert np.array_equal(x, y)
    gens = np.array([[0, 1, 2], [2, 1, 0]], dtype=np.int32) % alg.n
    x = _kernels.subuniverse_closure(alg.flat_tables(), alg.arities, alg.n, 3, gens)
    y = _fallback.subuniverse_closure(alg.flat_tables(), alg.arities, alg.n, 3, gens)
    assert np.array_equal(x, y)


def test_generate_subuniverse_contains_generators():
    alg = load("c8")
    sub = generate_subuniverse(alg, 1, [[alg.index["i"]]])
    assert {alg.labels[t[0]] for t in sub} == {"1", "-1", "i", "-i"}


def test_pure_python_switch():
    env = dict(os.environ, RETIC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import retic; print(retic.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(_kernels is None, reason="compiled extension not built")
def test_compiled_backend_is_default():
    if os.environ.get("RETIC_PURE_PYTHON"):
        pytest.skip("fallback forced by the environment")
    assert kernels.BACKEND == "cython"
