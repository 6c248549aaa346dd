# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure kernels.

Both functions take operation tables as flat int32 arrays in row-major
order (last argument varies fastest) and must agree exactly with the
pure-Python versions in ``_fallback``.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _find(int[::1] parent, int x) noexcept nogil:
    cdef int r = x
    cdef int nxt
    while parent[r] != r:
        r = parent[r]
    while parent[x] != r:
        nxt = parent[x]
        parent[x] = r
        x = nxt
    return r


cdef inline bint _union(int[::1] parent, int x, int y) noexcept nogil:
    # the smaller root wins, so every root is the least element of its block
    cdef int rx = _find(parent, x)
    cdef int ry = _find(parent, y)
    if rx == ry:
        return False
    if rx < ry:
        parent[ry] = rx
    else:
        parent[rx] = ry
    return True


def cg_closure(list tables, list arities, int n, seeds):
    """Least congruence containing ``seeds``, as a least-representative vector."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2] sd = np.ascontiguousarray(seeds, dtype=np.int32).reshape(-1, 2)
    cdef int[::1] parent = np.arange(n, dtype=np.int32)
    cdef const int[::1] tab
    cdef Py_ssize_t nops = len(tables)
    cdef Py_ssize_t q, top, t, count, stride, low, high, base
    cdef int k, i, x, y, a, b, o
    # stack of merged pairs; at most n-1 merges ever succeed
    cdef int[::1] sx = np.empty(max(n, 1), dtype=np.int32)
    cdef int[::1] sy = np.empty(max(n, 1), dtype=np.int32)
    cdef list flat = [np.ascontiguousarray(tb, dtype=np.int32).ravel() for tb in tables]
    cdef int[::1] ar = np.asarray(arities, dtype=np.int32)

    top = 0
    for q in range(sd.shape[0]):
        if _union(parent, sd[q, 0], sd[q, 1]):
            sx[top] = sd[q, 0]
            sy[top] = sd[q, 1]
            top += 1

    while top > 0:
        top -= 1
        x = sx[top]
        y = sy[top]
        for o in range(nops):
            k = ar[o]
            if k == 0:
                continue
            tab = flat[o]
            count = 1
            for i in range(k - 1):
                count *= n
            for i in range(k):
                # stride of argument position i
                stride = 1
                for a in range(k - 1 - i):
                    stride *= n
                for t in range(count):
                    low = t % stride
                    high = t // stride
                    base = high * stride * n + low
                    a = tab[base + x * stride]
                    b = tab[base + y * stride]
                    if a != b and _union(parent, a, b):
                        sx[top] = a
                        sy[top] = b
                        top += 1

    out = np.empty(n, dtype=np.int32)
    cdef int[::1] ov = out
    for x in range(n):
        ov[x] = _find(parent, x)
    return out


def subuniverse_closure(list tables, list arities, int n, int k, gens):
    """All k-tuples reachable from ``gens`` under coordinatewise operations.

    Returns an (m, k) int32 array sorted by tuple code.
    """
    cdef Py_ssize_t total = 1
    cdef int c
    for c in range(k):
        total *= n
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen_arr = np.zeros(total, dtype=np.uint8)
    cdef cnp.uint8_t[::1] seen = seen_arr
    cdef int[:, ::1] mem = np.empty((total, k), dtype=np.int32)
    cdef Py_ssize_t size = 0
    cdef Py_ssize_t[::1] weight = np.empty(k, dtype=np.intp)
    cdef list flat = [np.ascontiguousarray(tb, dtype=np.int32).ravel() for tb in tables]
    cdef int[::1] ar = np.asarray(arities, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2] g = np.ascontiguousarray(gens, dtype=np.int32).reshape(-1, k)
    cdef const int[::1] tab
    cdef int[::1] buf = np.empty(k, dtype=np.int32)
    cdef Py_ssize_t code, j, q, o, p, idx, w
    cdef int arity, pos, d
    cdef int[::1] args = np.empty(64, dtype=np.int32)
    cdef int[::1] lim = np.empty(64, dtype=np.int32)

    w = 1
    for c in range(k - 1, -1, -1):
        weight[c] = w
        w *= n

    for q in range(g.shape[0]):
        code = 0
        for c in range(k):
            code += g[q, c] * weight[c]
        if not seen[code]:
            seen[code] = 1
            for c in range(k):
                mem[size, c] = g[q, c]
            size += 1

    for o in range(len(flat)):
        if ar[o] == 0:
            tab = flat[o]
            code = 0
            for c in range(k):
                code += tab[0] * weight[c]
            if not seen[code]:
                seen[code] = 1
                for c in range(k):
                    mem[size, c] = tab[0]
                size += 1

    j = 0
    while j < size:
        for o in range(len(flat)):
            arity = ar[o]
            if arity == 0:
                continue
            if arity > 64:
                raise ValueError("arity above 64 is not supported")
            tab = flat[o]
            # first occurrence of j sits at position p; earlier positions
            # range over [0, j), later ones over [0, j]
            for p in range(arity):
                for pos in range(arity):
                    if pos < p:
                        lim[pos] = <int>j
                    elif pos == p:
                        lim[pos] = 1
                    else:
                        lim[pos] = <int>(j + 1)
                skip = False
                for pos in range(arity):
                    if lim[pos] == 0:
                        skip = True
                if skip:
                    continue
                for pos in range(arity):
                    args[pos] = 0
                while True:
                    code = 0
                    for c in range(k):
                        idx = 0
                        for pos in range(arity):
                            if pos == p:
                                d = mem[j, c]
                            else:
                                d = mem[args[pos], c]
                            idx = idx * n + d
                        buf[c] = tab[idx]
                        code += buf[c] * weight[c]
                    if not seen[code]:
                        seen[code] = 1
                        for c in range(k):
                            mem[size, c] = buf[c]
                        size += 1
                    # odometer step
                    pos = arity - 1
                    while pos >= 0:
                        if pos != p:
                            args[pos] += 1
                            if args[pos] < lim[pos]:
                                break
                            args[pos] = 0
                        pos -= 1
                    if pos < 0:
                        break
        j += 1

    out = np.asarray(mem[:size]).copy()
    if size:
        codes = out.astype(np.int64) @ np.asarray(weight, dtype=np.int64)
        out = out[np.argsort(codes, kind="stable")]
    return out
