"""Congruence generation and the congruence lattice Con(A)."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .algebra import FiniteAlgebra, compatibility_violation
from .lattice import FiniteBoundedLattice
from .partition import Congruence, join_all

__all__ = [
    "Congruence",
    "CongruenceLattice",
    "cg_generate",
    "enumerate_congruences",
    "is_compatible",
    "lattice_tests",
    "maximal_congruences",
    "singleton_subuniverses",
]


def cg_generate(alg: FiniteAlgebra, pairs: Iterable[Sequence[int]]) -> Congruence:
    """Cg_A(pairs): least congruence containing the given pairs."""
    seeds = np.asarray([tuple(p) for p in pairs], dtype=np.int32).reshape(-1, 2)
    rep = kernels.cg_closure(alg.flat_tables(), alg.arities, alg.n, seeds)
    return Congruence(tuple(int(v) for v in rep))


def is_compatible(alg: FiniteAlgebra, theta: Congruence) -> bool:
    return compatibility_violation(alg, theta) is None


def _sort_key(c: Congruence):
    return (-c.num_blocks, c.rep)


@dataclass(eq=False)
class CongruenceLattice:
    algebra: FiniteAlgebra
    elements: list[Congruence]
    principal: tuple[bool, ...]
    lattice: FiniteBoundedLattice = field(repr=False)

    @cached_property
    def index(self) -> dict[Congruence, int]:
        return {c: i for i, c in enumerate(self.elements)}

    def index_of(self, c: Congruence) -> int:
        return self.index[c]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def hasse(self) -> list[tuple[int, int]]:
        return self.lattice.covers

    def label(self, i: int) -> str:
        return self.lattice.labels[i]

    def by_name(self, name: str) -> int:
        return self.lattice.labels.index(name)


def _label(alg: FiniteAlgebra, c: Congruence) -> str:
    name = alg.congruence_names.get(c)
    if name:
        return name
    if c.is_identity():
        return "Δ"
    if c.is_full():
        return "∇"
    return c.format(alg.labels)


def congruence_lattice(alg: FiniteAlgebra, congs: Iterable[Congruence], principal: set[Congruence]) -> CongruenceLattice:
    elems = sorted(set(congs), key=_sort_key)
    R = np.asarray([c.rep for c in elems], dtype=np.int64).reshape(len(elems), alg.n)
    # i <= j iff rep_j is constant on the blocks of i
    m = len(elems)
    leq = np.all(R[np.arange(m)[None, :, None], R[:, None, :]] == R[None, :, :], axis=2)
    labels = [_label(alg, c) for c in elems]
    lat = FiniteBoundedLattice.from_leq(labels, leq)
    return CongruenceLattice(alg, elems, tuple(c in principal for c in elems), lat)


def enumerate_congruences(alg: FiniteAlgebra) -> CongruenceLattice:
    """Con(A) as the join-closure of the principal congruences."""
    n = alg.n
    principal = {cg_generate(alg, [(a, b)]) for a in range(n) for b in range(a, n)}
    found = set(principal)
    frontier = list(found)
    base = list(principal)
    while frontier:
        fresh = []
        for c in frontier:
            for p in base:
                j = join_all([c, p], n)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    return congruence_lattice(alg, found, principal)


def lattice_tests(lat: CongruenceLattice | FiniteBoundedLattice) -> dict[str, bool]:
    l = lat.lattice if isinstance(lat, CongruenceLattice) else lat
    return {"modular": l.is_modular(), "distributive": l.is_distributive()}


def maximal_congruences(lat: CongruenceLattice) -> list[Congruence]:
    return [lat.elements[i] for i in lat.lattice.lower_covers(lat.top)]


def singleton_subuniverses(alg: FiniteAlgebra) -> list[int]:
    """Elements x with {x} closed under every operation."""
    out = []
    for x in range(alg.n):
        ok = True
        for (_, k), tab in zip(alg.signature, alg.tables):
            if int(tab[(x,) * k]) != x:
                ok = False
                break
        if ok:
            out.append(x)
    return out
