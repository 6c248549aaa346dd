"""Partitions of {0..n-1} in least-representative form."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


def _canonical(labels: np.ndarray) -> tuple[int, ...]:
    # map each element to the least element carrying the same label
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    return tuple(int(v) for v in first[inverse.ravel()])


@dataclass(frozen=True)
class Congruence:
    """A partition given by ``rep[x]`` = least element of x's block.

    Being a congruence is a property relative to an algebra; the value
    itself is just the partition. ``is_compatible`` in ``congruence``
    checks it against a particular algebra.
    """

    rep: tuple[int, ...]

    def __post_init__(self):
        for x, r in enumerate(self.rep):
            if r > x or self.rep[r] != r:
                raise ValueError(f"not in least-representative form: {self.rep}")

    @classmethod
    def from_rep(cls, rep: Iterable[int]) -> "Congruence":
        return cls(_canonical(np.asarray(list(rep), dtype=np.int64)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels = np.arange(n)
        seen = set()
        for block in blocks:
            block = list(block)
            for x in block:
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
            if block:
                labels[block] = min(block)
        return cls(_canonical(labels))

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.rep)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.asarray(self.rep, dtype=np.int32)
        a.flags.writeable = False
        return a

    @cached_property
    def num_blocks(self) -> int:
        return sum(1 for x, r in enumerate(self.rep) if x == r)

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, r in enumerate(self.rep):
            out.setdefault(r, []).append(x)
        return list(out.values())

    def related(self, x: int, y: int) -> bool:
        return self.rep[x] == self.rep[y]

    def pairs(self) -> np.ndarray:
        """All (x, y) in the relation, as an (m, 2) array."""
        a = self.array
        xs, ys = np.nonzero(a[:, None] == a[None, :])
        return np.stack([xs, ys], axis=1).astype(np.int32)

    def generators(self) -> np.ndarray:
        """Pairs (x, rep[x]) with x != rep[x]; they generate the partition."""
        a = self.array
        moved = np.flatnonzero(a != np.arange(self.n))
        return np.stack([moved, a[moved]], axis=1).astype(np.int32)

    def leq(self, other: "Congruence") -> bool:
        # every block of self lies inside a block of other
        o = other.array
        return bool(np.all(o == o[self.array]))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence(_canonical(self.array.astype(np.int64) * self.n + other.array))

    def join(self, other: "Congruence") -> "Congruence":
        return join_all([self, other], self.n)

    def is_identity(self) -> bool:
        return all(x == r for x, r in enumerate(self.rep))

    def is_full(self) -> bool:
        return all(r == 0 for r in self.rep)

    def format(self, labels: Sequence[str] | None = None) -> str:
        lab = labels if labels is not None else [str(i) for i in range(self.n)]
        return "|".join(" ".join(lab[x] for x in b) for b in self.blocks())


def join_all(parts: Sequence[Congruence], n: int) -> Congruence:
    """Equivalence join of a family of partitions of an n-set."""
    labels = np.arange(n, dtype=np.int64)
    reps = [p.array for p in parts]
    while True:
        before = labels
        for r in reps:
            low = np.full(n, n, dtype=np.int64)
            np.minimum.at(low, r, labels)
            labels = low[r]
        if np.array_equal(labels, before):
            return Congruence(tuple(int(v) for v in labels))
