"""Hypothesis strategies for small random algebras and partitions."""
from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from retic.algebra import make_algebra
from retic.partition import Congruence


@st.composite
def algebras(draw, max_n=4, max_ops=2):
    """Algebras on 1..max_n elements with unary and binary operations."""
    n = draw(st.integers(1, max_n))
    k_ops = draw(st.integers(1, max_ops))
    ops = []
    for i in range(k_ops):
        k = draw(st.sampled_from([1, 2]))
        cells = draw(st.lists(st.integers(0, n - 1), min_size=n ** k, max_size=n ** k))
        ops.append((f"f{i}", k, np.asarray(cells).reshape((n,) * k)))
    return make_algebra([f"e{i}" for i in range(n)], ops, name="random")


@st.composite
def partitions(draw, n):
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return Congruence.from_rep(labels)
