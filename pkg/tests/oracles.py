"""Independent brute-force references.

Nothing here calls the closure kernels or the lattice code under test:
congruences come from checking every partition, commutators of groups
from subgroup generation, and the group tables from sympy.
"""
from __future__ import annotations

import itertools

from sympy.algebras.quaternion import Quaternion
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_partitions

from retic.partition import Congruence


def set_partitions(n: int):
    """Every partition of {0..n-1}, as a Congruence."""
    if n == 0:
        return [Congruence(())]
    return [Congruence.from_blocks(n, blocks) for blocks in multiset_partitions(list(range(n)))]


def is_compatible(alg, theta: Congruence) -> bool:
    for (_, k), tab in zip(alg.signature, alg.tables):
        for xs in itertools.product(range(alg.n), repeat=k):
            for ys in itertools.product(range(alg.n), repeat=k):
                if all(theta.rep[x] == theta.rep[y] for x, y in zip(xs, ys)):
                    if theta.rep[int(tab[xs])] != theta.rep[int(tab[ys])]:
                        return False
    return True


def brute_con(alg) -> set[Congruence]:
    return {p for p in set_partitions(alg.n) if is_compatible(alg, p)}


def brute_cg(alg, pairs) -> Congruence:
    """Least compatible partition containing the pairs, by filtering."""
    cands = [c for c in brute_con(alg) if all(c.rep[a] == c.rep[b] for a, b in pairs)]
    return min(cands, key=lambda c: -c.num_blocks)


def brute_cg_all(alg) -> dict[tuple[int, int], Congruence]:
    con = brute_con(alg)
    out = {}
    for a in range(alg.n):
        for b in range(a, alg.n):
            cands = [c for c in con if c.rep[a] == c.rep[b]]
            out[(a, b)] = max(cands, key=lambda c: c.num_blocks)
    return out


# -- groups --------------------------------------------------------------------


def quaternion_table():
    """Labels and multiplication of the quaternion group, via sympy."""
    units = {
        "1": Quaternion(1, 0, 0, 0),
        "i": Quaternion(0, 1, 0, 0),
        "j": Quaternion(0, 0, 1, 0),
        "k": Quaternion(0, 0, 0, 1),
    }
    elems = {}
    for name, q in units.items():
        elems[name] = q
        elems["-" + name] = -q
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    back = {tuple(elems[l].to_Matrix()): l for l in labels}
    table = [[back[tuple((elems[x] * elems[y]).to_Matrix())] for y in labels] for x in labels]
    return labels, table


def s3_table():
    """S3 with t=(1 2), u=(1 3), v=(2 3), c=(1 2 3), d=c∘c; (xy)(p) = x(y(p))."""
    perms = {
        "1": Permutation([0, 1, 2]),
        "t": Permutation([1, 0, 2]),
        "u": Permutation([2, 1, 0]),
        "v": Permutation([0, 2, 1]),
        "c": Permutation([1, 2, 0]),
    }
    perms["d"] = perms["c"] * perms["c"]
    labels = ["1", "t", "u", "v", "c", "d"]
    back = {perms[l]: l for l in labels}
    # sympy composes left to right: (p*q)(x) = q(p(x)), so x∘y is y*x
    table = [[back[perms[y] * perms[x]] for y in labels] for x in labels]
    return labels, table


def _mul(alg):
    return alg.table("mul")


def _generated(alg, gens) -> frozenset[int]:
    mul = _mul(alg)
    e = int(alg.table("e")[()])
    out = {e} | set(gens)
    while True:
        fresh = {int(mul[a, b]) for a in out for b in out} - out
        if not fresh:
            return frozenset(out)
        out |= fresh


def normal_subgroups(alg) -> list[frozenset[int]]:
    mul, inv = _mul(alg), alg.table("inv")
    subs = set()
    # every subgroup of the fixtures needs at most two generators
    for size in (1, 2):
        for gens in itertools.combinations(range(alg.n), size):
            subs.add(_generated(alg, gens))
    return [h for h in subs
            if all(int(mul[mul[g, x], inv[g]]) in h for g in range(alg.n) for x in h)]


def coset_congruence(alg, h: frozenset[int]) -> Congruence:
    mul, inv = _mul(alg), alg.table("inv")
    rep = [min(y for y in range(alg.n) if int(mul[inv[x], y]) in h) for x in range(alg.n)]
    return Congruence.from_rep(rep)


def subgroup_commutator(alg, h, k) -> frozenset[int]:
    mul, inv = _mul(alg), alg.table("inv")
    comms = {int(mul[mul[inv[a], inv[b]], mul[a, b]]) for a in h for b in k}
    return _generated(alg, comms)


def group_commutator_table(alg):
    """Normal subgroups N_i and the index table of [N_i, N_j]."""
    subs = normal_subgroups(alg)
    pos = {h: i for i, h in enumerate(subs)}
    return subs, [[pos[subgroup_commutator(alg, h, k)] for k in subs] for h in subs]


# -- lattices --------------------------------------------------------------------


def brute_ideals(leq) -> list[frozenset[int]]:
    """Every nonempty down-set closed under joins, from the order matrix alone."""
    m = len(leq)
    out = []
    for bits in range(1, 1 << m):
        s = {i for i in range(m) if bits >> i & 1}
        down = all(j in s for i in s for j in range(m) if leq[j][i])
        if not down:
            continue
        closed = True
        for a in s:
            for b in s:
                ubs = [c for c in range(m) if leq[a][c] and leq[b][c]]
                lub = next(c for c in ubs if all(leq[c][d] for d in ubs))
                if lub not in s:
                    closed = False
        if closed:
            out.append(frozenset(s))
    return out


def brute_prime_commutator(table, leq, phi) -> bool:
    """φ ≠ ∇ and [a,b] ≤ φ ⟹ a ≤ φ or b ≤ φ, straight from the definition."""
    m = len(table)
    top = next(i for i in range(m) if all(leq[j][i] for j in range(m)))
    if phi == top:
        return False
    return all(leq[a][phi] or leq[b][phi]
               for a in range(m) for b in range(m) if leq[table[a][b]][phi])
