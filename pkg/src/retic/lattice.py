"""Finite bounded lattices: construction, ideals, and isomorphism."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import LatticeTooLarge

DEFAULT_MAX_LATTICE = 20


def max_lattice_cap() -> int:
    raw = os.environ.get("RETIC_MAX_LATTICE")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_LATTICE


@dataclass(frozen=True, eq=False)
class FiniteBoundedLattice:
    labels: tuple[str, ...]
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    bottom: int
    top: int

    @classmethod
    def from_leq(cls, labels: Sequence[str], leq) -> "FiniteBoundedLattice":
        """Build from a full order matrix; raises ValueError if not a lattice."""
        leq = np.array(leq, dtype=bool)
        m = len(labels)
        if leq.shape != (m, m) or m == 0:
            raise ValueError("order matrix must be square and non-empty")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if (leq & leq.T & ~np.eye(m, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        if ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
            raise ValueError("order is not transitive")
        join = np.empty((m, m), dtype=np.int64)
        meet = np.empty((m, m), dtype=np.int64)
        for a in range(m):
            for b in range(a, m):
                ub = np.flatnonzero(leq[a] & leq[b])
                least = [u for u in ub if leq[u, ub].all()]
                lb = np.flatnonzero(leq[:, a] & leq[:, b])
                great = [v for v in lb if leq[lb, v].all()]
                if not least or not great:
                    raise ValueError(f"{labels[a]} and {labels[b]} lack a join or meet")
                join[a, b] = join[b, a] = least[0]
                meet[a, b] = meet[b, a] = great[0]
        bottom = [x for x in range(m) if leq[x].all()]
        top = [x for x in range(m) if leq[:, x].all()]
        return cls._frozen(labels, leq, join, meet, bottom[0], top[0])

    @classmethod
    def from_covers(cls, labels: Sequence[str], covers: Iterable[tuple[int, int]]) -> "FiniteBoundedLattice":
        m = len(labels)
        leq = np.eye(m, dtype=bool)
        for a, b in covers:
            leq[a, b] = True
        # reflexive-transitive closure
        for k in range(m):
            leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
        return cls.from_leq(labels, leq)

    @classmethod
    def _frozen(cls, labels, leq, join, meet, bottom, top):
        arrays = []
        for a in (leq, join, meet):
            a = np.array(a)
            a.flags.writeable = False
            arrays.append(a)
        return cls(tuple(labels), arrays[0], arrays[1], arrays[2], int(bottom), int(top))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (a, b) with a < b and nothing strictly between."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(lt & ~between))]

    @cached_property
    def height(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        order = sorted(range(self.size), key=lambda x: int(self.leq[:, x].sum()))
        h = [0] * self.size
        for b in order:
            for a, c in self.covers:
                if c == b:
                    h[b] = max(h[b], h[a] + 1)
        return tuple(h)

    def upper_covers(self, x: int) -> list[int]:
        return [b for a, b in self.covers if a == x]

    def lower_covers(self, x: int) -> list[int]:
        return [a for a, b in self.covers if b == x]

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bottom
        for x in xs:
            out = int(self.join[out, x])
        return out

    def meet_all(self, xs: Iterable[int]) -> int:
        out = self.top
        for x in xs:
            out = int(self.meet[out, x])
        return out

    # -- identities -------------------------------------------------------

    def distributivity_witness(self):
        """(a, b, c) with a∧(b∨c) ≠ (a∧b)∨(a∧c), or None."""
        J, M = self.join, self.meet
        lhs = M[np.arange(self.size)[:, None, None], J[None, :, :]]
        rhs = J[M[:, :, None], M[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        return tuple(int(v) for v in bad[0]) if len(bad) else None

    def modularity_witness(self):
        """(a, b, c) with a ≤ c and a∨(b∧c) ≠ (a∨b)∧c, or None."""
        J, M = self.join, self.meet
        lhs = J[np.arange(self.size)[:, None, None], M[None, :, :]]
        rhs = M[J[:, :, None], np.arange(self.size)[None, None, :]]
        bad = np.argwhere((lhs != rhs) & self.leq[:, None, :])
        return tuple(int(v) for v in bad[0]) if len(bad) else None

    def is_distributive(self) -> bool:
        return self.distributivity_witness() is None

    def is_modular(self) -> bool:
        return self.modularity_witness() is None

    def complements(self, x: int) -> list[int]:
        return [
            y
            for y in range(self.size)
            if self.join[x, y] == self.top and self.meet[x, y] == self.bottom
        ]

    def complemented(self) -> list[int]:
        return [x for x in range(self.size) if self.complements(x)]

    def is_boolean(self) -> bool:
        return self.is_distributive() and len(self.complemented()) == self.size

    def meet_irreducible(self, x: int) -> bool:
        return x != self.top and len(self.upper_covers(x)) == 1

    def principal_filter(self, x: int) -> list[int]:
        return [int(y) for y in np.flatnonzero(self.leq[x])]

    def principal_ideal(self, x: int) -> list[int]:
        return [int(y) for y in np.flatnonzero(self.leq[:, x])]

    def sublattice(self, elements: Sequence[int]) -> "FiniteBoundedLattice":
        """Restriction to a subset, with the induced order (must be a lattice)."""
        idx = np.asarray(elements)
        return FiniteBoundedLattice.from_leq([self.labels[i] for i in elements], self.leq[np.ix_(idx, idx)])

    # -- ideals -----------------------------------------------------------

    def is_ideal(self, members: Iterable[int]) -> bool:
        s = set(members)
        if not s:
            return False
        for x in s:
            if any(y not in s for y in self.principal_ideal(x)):
                return False
            if any(int(self.join[x, y]) not in s for y in s):
                return False
        return True

    def ideals(self, cap: int | None = None) -> list["LatticeIdeal"]:
        """All ideals, ordered by their generator.

        In a finite lattice every ideal is the down-set of its join, so the
        ideals are exactly the principal ones.
        """
        cap = max_lattice_cap() if cap is None else cap
        if self.size > cap:
            raise LatticeTooLarge(
                f"lattice has {self.size} elements; ideal enumeration is capped at {cap}"
                " (raise it with --max-lattice or RETIC_MAX_LATTICE)"
            )
        return [LatticeIdeal(frozenset(self.principal_ideal(x))) for x in range(self.size)]

    def ideal_generator(self, ideal: "LatticeIdeal") -> int:
        return self.join_all(ideal.members)

    def is_prime_ideal(self, ideal: "LatticeIdeal") -> bool:
        s = ideal.members
        if self.top in s:
            return False
        for x in range(self.size):
            for y in range(x, self.size):
                if int(self.meet[x, y]) in s and x not in s and y not in s:
                    return False
        return True

    def prime_ideals(self, cap: int | None = None) -> list["LatticeIdeal"]:
        return [i for i in self.ideals(cap) if self.is_prime_ideal(i)]

    def max_ideals(self, cap: int | None = None) -> list["LatticeIdeal"]:
        proper = [i for i in self.ideals(cap) if self.top not in i.members]
        return [i for i in proper if not any(i.members < j.members for j in proper)]

    def ideal_lattice(self, cap: int | None = None) -> tuple["FiniteBoundedLattice", list["LatticeIdeal"]]:
        ids = self.ideals(cap)
        leq = [[a.members <= b.members for b in ids] for a in ids]
        labels = [f"({self.labels[self.ideal_generator(i)]}]" for i in ids]
        return FiniteBoundedLattice.from_leq(labels, leq), ids

    def annihilator(self, ideal: "LatticeIdeal") -> "LatticeIdeal":
        return LatticeIdeal(
            frozenset(a for a in range(self.size) if all(self.meet[a, x] == self.bottom for x in ideal.members))
        )

    def quotient_by_ideal(self, ideal: "LatticeIdeal") -> tuple["FiniteBoundedLattice", list[int]]:
        """L/I under x ~ y iff x∨a = y∨a for some a in I (distributive L).

        Returns the quotient and the class index of every element.
        """
        cls_of = [-1] * self.size
        reps: list[int] = []
        for x in range(self.size):
            if cls_of[x] >= 0:
                continue
            cls_of[x] = len(reps)
            for y in range(x + 1, self.size):
                if cls_of[y] < 0 and any(self.join[x, a] == self.join[y, a] for a in ideal.members):
                    cls_of[y] = len(reps)
            reps.append(x)
        k = len(reps)
        leq = [[cls_of[self.join[reps[a], reps[b]]] == b for b in range(k)] for a in range(k)]
        labels = [f"[{self.labels[r]}]" for r in reps]
        return FiniteBoundedLattice.from_leq(labels, leq), cls_of


@dataclass(frozen=True)
class LatticeIdeal:
    members: frozenset[int]

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


# -- constructions ---------------------------------------------------------


def chain(m: int) -> FiniteBoundedLattice:
    labels = [str(i) for i in range(m)]
    return FiniteBoundedLattice.from_leq(labels, np.triu(np.ones((m, m), dtype=bool)))


def product(a: FiniteBoundedLattice, b: FiniteBoundedLattice) -> FiniteBoundedLattice:
    leq = (a.leq[:, None, :, None] & b.leq[None, :, None, :]).reshape(a.size * b.size, a.size * b.size)
    labels = [f"({x},{y})" for x in a.labels for y in b.labels]
    return FiniteBoundedLattice.from_leq(labels, leq)


def power(a: FiniteBoundedLattice, k: int) -> FiniteBoundedLattice:
    out = a
    for _ in range(k - 1):
        out = product(out, a)
    return out


def glued_sum(a: FiniteBoundedLattice, b: FiniteBoundedLattice) -> FiniteBoundedLattice:
    """a below b with the top of a identified with the bottom of b."""
    ia = [x for x in range(a.size) if x != a.top] + [a.top]
    ib = [y for y in range(b.size) if y != b.bottom]
    m = len(ia) + len(ib)
    leq = np.zeros((m, m), dtype=bool)
    na = len(ia)
    leq[:na, :na] = a.leq[np.ix_(ia, ia)]
    leq[:na, na:] = True
    # a's top is b's bottom, which lies below all of b
    leq[na:, na:] = b.leq[np.ix_(ib, ib)]
    labels = [f"a{a.labels[x]}" for x in ia] + [f"b{b.labels[y]}" for y in ib]
    return FiniteBoundedLattice.from_leq(labels, leq)


def _catalog() -> dict[str, FiniteBoundedLattice]:
    two = chain(2)
    cat = {f"L{m}": chain(m) for m in range(1, 6)}
    cat["L2^2"] = power(two, 2)
    cat["L2^3"] = power(two, 3)
    cat["L2+L2^2"] = glued_sum(two, power(two, 2))
    cat["L2+L2+L2"] = glued_sum(glued_sum(two, two), two)
    return cat


NAMED_LATTICES = _catalog()


def identify(lat: FiniteBoundedLattice) -> list[str]:
    """Names from the catalog isomorphic to ``lat``."""
    return [name for name, ref in NAMED_LATTICES.items() if lattice_iso(lat, ref) is not None]


# -- isomorphism -----------------------------------------------------------


def _invariant(lat: FiniteBoundedLattice, x: int) -> tuple[int, int, int]:
    return (lat.height[x], len(lat.lower_covers(x)), len(lat.upper_covers(x)))


def lattice_iso(a: FiniteBoundedLattice, b: FiniteBoundedLattice) -> dict[int, int] | None:
    """An order isomorphism a -> b, or None.

    Candidates are restricted to elements with the same (height, in-degree,
    out-degree); the search assigns elements in order of increasing height
    and checks the cover relation against every earlier assignment.
    """
    if a.size != b.size or len(a.covers) != len(b.covers):
        return None
    inv_a = [_invariant(a, x) for x in range(a.size)]
    inv_b = [_invariant(b, y) for y in range(b.size)]
    if sorted(inv_a) != sorted(inv_b):
        return None
    order = sorted(range(a.size), key=lambda x: (inv_a[x], x))
    cands = {x: [y for y in range(b.size) if inv_b[y] == inv_a[x]] for x in order}
    cover_a = set(a.covers)
    cover_b = set(b.covers)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def fits(x: int, y: int) -> bool:
        for x2, y2 in mapping.items():
            if ((x, x2) in cover_a) != ((y, y2) in cover_b):
                return False
            if ((x2, x) in cover_a) != ((y2, y) in cover_b):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in cands[x]:
            if y in used or not fits(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if search(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(sorted(mapping.items())) if search(0) else None


def is_lattice_morphism(a: FiniteBoundedLattice, b: FiniteBoundedLattice, f: Sequence[int]) -> bool:
    """Bounded lattice morphism check for a map given as a list."""
    f = np.asarray(f)
    return (
        f[a.bottom] == b.bottom
        and f[a.top] == b.top
        and np.array_equal(f[a.join], b.join[f[:, None], f[None, :]])
        and np.array_equal(f[a.meet], b.meet[f[:, None], f[None, :]])
    )
