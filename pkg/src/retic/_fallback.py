"""Pure numpy/scipy versions of the closure kernels.

Same signatures and results as the compiled ``_kernels`` module.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def _least_reps(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    if n == 0:
        return np.empty(0, dtype=np.int32)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=False)
    least = np.full(labels.max() + 1, n, dtype=np.int64)
    np.minimum.at(least, labels, np.arange(n))
    return least[labels].astype(np.int32)


def cg_closure(tables, arities, n, seeds):
    """Least congruence containing ``seeds``, as a least-representative vector."""
    seeds = np.asarray(seeds, dtype=np.int64).reshape(-1, 2)
    shaped = [np.asarray(t, dtype=np.int64).reshape((n,) * k) for t, k in zip(tables, arities) if k > 0]
    rep = _least_reps(n, seeds[:, 0], seeds[:, 1])
    while True:
        moved = np.flatnonzero(rep != np.arange(n))
        if len(moved) == 0:
            return rep
        src = [moved]
        dst = [rep[moved].astype(np.int64)]
        # x ~ rep[x] generates the current partition, so compatibility only
        # needs every translation of those pairs
        for tab in shaped:
            for axis in range(tab.ndim):
                a = np.take(tab, moved, axis=axis)
                b = np.take(tab, rep[moved], axis=axis)
                src.append(a.ravel())
                dst.append(b.ravel())
        new = _least_reps(n, np.concatenate(src), np.concatenate(dst))
        if np.array_equal(new, rep):
            return rep
        rep = new


def subuniverse_closure(tables, arities, n, k, gens):
    """All k-tuples reachable from ``gens`` under coordinatewise operations.

    Returns an (m, k) int32 array sorted by tuple code.
    """
    weight = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, k)
    ops = [(np.asarray(t, dtype=np.int64).reshape((n,) * a), a) for t, a in zip(tables, arities)]
    start = [gens]
    for tab, a in ops:
        if a == 0:
            start.append(np.full((1, k), int(tab), dtype=np.int64))
    members = np.unique(np.concatenate(start) @ weight)
    frontier = members

    def decode(codes):
        return (codes[:, None] // weight[None, :]) % n

    while len(frontier):
        old = np.setdiff1d(members, frontier, assume_unique=True)
        found = []
        for tab, a in ops:
            if a == 0:
                continue
            full = decode(members)
            fresh = decode(frontier)
            prev = decode(old)
            # semi-naive: the first new argument sits at position p
            for p in range(a):
                pools = [prev] * p + [fresh] + [full] * (a - p - 1)
                if any(len(pl) == 0 for pl in pools):
                    continue
                grids = np.meshgrid(*[np.arange(len(pl)) for pl in pools], indexing="ij")
                idx = [g.ravel() for g in grids]
                coords = tab[tuple(pools[i][idx[i]] for i in range(a))]
                found.append(coords @ weight)
        if not found:
            break
        cand = np.unique(np.concatenate(found))
        frontier = np.setdiff1d(cand, members, assume_unique=True)
        members = np.union1d(members, frontier)
    return decode(members).astype(np.int32)
