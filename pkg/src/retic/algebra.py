"""Finite algebras as operation tables, and the constructions on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CompatibilityError, SignatureError
from .partition import Congruence


@dataclass(frozen=True)
class Signature:
    operations: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.operations]
        if len(set(names)) != len(names):
            raise SignatureError(f"duplicate operation symbols in {names}")
        for name, arity in self.operations:
            if arity < 0:
                raise SignatureError(f"negative arity for {name}")

    def arity(self, name: str) -> int:
        for op, k in self.operations:
            if op == name:
                return k
        raise SignatureError(f"unknown operation symbol {name!r}")

    def __iter__(self):
        return iter(self.operations)

    def __len__(self):
        return len(self.operations)


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Carrier {0..n-1} with labels, plus one table per operation.

    A table for an operation of arity k is an int32 array of shape (n,)*k;
    nullary operations are 0-d arrays.
    """

    labels: tuple[str, ...]
    signature: Signature
    tables: tuple[np.ndarray, ...]
    name: str = ""
    congruence_names: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise ValueError("carrier must be non-empty")
        if len(set(self.labels)) != n:
            raise ValueError("carrier labels must be distinct")
        if len(self.tables) != len(self.signature):
            raise SignatureError("one table per operation is required")
        fixed = []
        for (op, k), tab in zip(self.signature, self.tables):
            tab = np.array(tab, dtype=np.int32)
            if tab.shape != (n,) * k:
                raise ValueError(f"table of {op} has shape {tab.shape}, expected {(n,) * k}")
            if tab.size and (tab.min() < 0 or tab.max() >= n):
                raise ValueError(f"table of {op} leaves the carrier")
            tab.flags.writeable = False
            fixed.append(tab)
        object.__setattr__(self, "tables", tuple(fixed))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def table(self, op: str) -> np.ndarray:
        for (name, _), tab in zip(self.signature, self.tables):
            if name == op:
                return tab
        raise SignatureError(f"unknown operation symbol {op!r}")

    @property
    def arities(self) -> list[int]:
        return [k for _, k in self.signature]

    def flat_tables(self) -> list[np.ndarray]:
        return [t.ravel() for t in self.tables]

    def same_as(self, other: "FiniteAlgebra") -> bool:
        return (
            self.labels == other.labels
            and self.signature == other.signature
            and all(np.array_equal(a, b) for a, b in zip(self.tables, other.tables))
        )


def make_algebra(labels: Sequence[str], ops: Iterable[tuple[str, int, object]], name: str = "") -> FiniteAlgebra:
    ops = list(ops)
    return FiniteAlgebra(
        labels=tuple(labels),
        signature=Signature(tuple((op, k) for op, k, _ in ops)),
        tables=tuple(np.asarray(t, dtype=np.int32) for _, _, t in ops),
        name=name,
    )


def evaluate(alg: FiniteAlgebra, op: str, args: Sequence[str]) -> str:
    k = alg.signature.arity(op)
    if len(args) != k:
        raise SignatureError(f"{op} has arity {k}, got {len(args)} arguments")
    try:
        idx = tuple(alg.index[a] for a in args)
    except KeyError as exc:
        raise SignatureError(f"label {exc.args[0]!r} is not in the carrier") from None
    return alg.labels[int(alg.table(op)[idx])]


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra) -> FiniteAlgebra:
    """Carrier pairs (i, j) encoded as i*|b| + j, row-major."""
    if a.signature != b.signature:
        raise SignatureError("direct product needs identical signatures")
    nb = b.n
    N = a.n * nb
    elems = np.arange(N)
    left, right = elems // nb, elems % nb
    tables = []
    for (_, k), ta, tb in zip(a.signature, a.tables, b.tables):
        if k == 0:
            tables.append(np.asarray(int(ta) * nb + int(tb), dtype=np.int32))
            continue
        grids = np.ix_(*([elems] * k))
        la = tuple(left[g] for g in grids)
        rb = tuple(right[g] for g in grids)
        tables.append((ta[la].astype(np.int64) * nb + tb[rb]).astype(np.int32))
    labels = tuple(f"({x},{y})" for x in a.labels for y in b.labels)
    return FiniteAlgebra(labels, a.signature, tuple(tables), name=f"{a.name}x{b.name}")


def compatibility_violation(alg: FiniteAlgebra, theta: Congruence):
    """First (op, args_u, args_v) where related inputs give unrelated outputs, else None."""
    rep = theta.array
    for (op, k), tab in zip(alg.signature, alg.tables):
        for axis in range(k):
            moved = np.flatnonzero(rep != np.arange(alg.n))
            if len(moved) == 0:
                break
            a = np.take(tab, moved, axis=axis)
            b = np.take(tab, rep[moved], axis=axis)
            bad = np.argwhere(rep[a] != rep[b])
            if len(bad):
                where = tuple(int(v) for v in bad[0])
                x = int(moved[where[axis]])
                u = list(where)
                u[axis] = x
                v = list(where)
                v[axis] = int(rep[x])
                return op, tuple(u), tuple(v)
    return None


@dataclass(frozen=True, eq=False)
class SurjectiveMorphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source.n:
            raise ValueError("map must be total on the source carrier")
        if self.source.signature != self.target.signature:
            raise SignatureError("source and target signatures differ")
        f = np.asarray(self.map, dtype=np.int64)
        if set(self.map) != set(range(self.target.n)):
            raise ValueError("map is not onto the target")
        for (op, k), ts, tt in zip(self.source.signature, self.source.tables, self.target.tables):
            if k == 0:
                ok = f[int(ts)] == int(tt)
            else:
                ok = np.array_equal(f[ts], tt[np.ix_(*([f] * k))])
            if not ok:
                raise ValueError(f"map does not commute with {op}")

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)

    def kernel(self) -> Congruence:
        return Congruence.from_rep(self.map)

    def compose(self, after: "SurjectiveMorphism") -> "SurjectiveMorphism":
        """after ∘ self."""
        return SurjectiveMorphism(self.source, after.target, tuple(after.map[x] for x in self.map))


def identity_morphism(alg: FiniteAlgebra) -> SurjectiveMorphism:
    return SurjectiveMorphism(alg, alg, tuple(range(alg.n)))


def quotient_algebra(a: FiniteAlgebra, theta: Congruence) -> tuple[FiniteAlgebra, SurjectiveMorphism]:
    """A/θ with blocks labelled by their least representative, and p_θ."""
    if theta.n != a.n:
        raise ValueError("partition is over a different carrier")
    bad = compatibility_violation(a, theta)
    if bad is not None:
        op, u, v = bad
        lu = tuple(a.labels[x] for x in u)
        lv = tuple(a.labels[x] for x in v)
        raise CompatibilityError(f"{op} is not compatible: {lu} vs {lv}", op=op, args=(u, v))
    reps = sorted(set(theta.rep))
    pos = np.full(a.n, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    proj = pos[theta.array]
    tables = []
    for (_, k), tab in zip(a.signature, a.tables):
        if k == 0:
            tables.append(np.asarray(proj[int(tab)], dtype=np.int32))
        else:
            sub = tab[np.ix_(*([np.asarray(reps)] * k))]
            tables.append(proj[sub].astype(np.int32))
    labels = tuple(a.labels[r] for r in reps)
    q = FiniteAlgebra(labels, a.signature, tuple(tables), name=f"{a.name}/~")
    return q, SurjectiveMorphism(a, q, tuple(int(v) for v in proj))


def subalgebra(a: FiniteAlgebra, elements: Iterable[int]) -> tuple[FiniteAlgebra, tuple[int, ...]]:
    """The subalgebra on a closed subset, with the inclusion map into ``a``."""
    elems = sorted(set(int(x) for x in elements))
    pos = {x: i for i, x in enumerate(elems)}
    tables = []
    for (op, k), tab in zip(a.signature, a.tables):
        sub = tab[np.ix_(*([np.asarray(elems)] * k))] if k else tab
        try:
            tables.append(np.vectorize(pos.__getitem__, otypes=[np.int32])(sub))
        except KeyError:
            raise CompatibilityError(f"subset is not closed under {op}", op=op) from None
    labels = tuple(a.labels[x] for x in elems)
    return FiniteAlgebra(labels, a.signature, tuple(tables), name=f"sub({a.name})"), tuple(elems)


def generate_subuniverse(alg: FiniteAlgebra, k: int, generators: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    """Least subset of A^k containing the generators and closed coordinatewise."""
    if k < 1:
        raise ValueError("k must be positive")
    gens = np.asarray([tuple(g) for g in generators], dtype=np.int32).reshape(-1, k)
    if gens.size and (gens.min() < 0 or gens.max() >= alg.n):
        raise ValueError("generator outside the carrier")
    out = subuniverse_array(alg, k, gens)
    return {tuple(int(v) for v in row) for row in out}


def subuniverse_array(alg: FiniteAlgebra, k: int, gens: np.ndarray) -> np.ndarray:
    if alg.n ** k > 1 << 26:
        raise ValueError(f"A^{k} has {alg.n ** k} tuples; too large for closure")
    if len(gens) == 0 and all(a > 0 for a in alg.arities):
        return np.empty((0, k), dtype=np.int32)
    return kernels.subuniverse_closure(alg.flat_tables(), alg.arities, alg.n, k, gens)


def pull_back(f: SurjectiveMorphism, beta: Congruence) -> Congruence:
    """f*(β) = {(x, y) : f(x) β f(y)}."""
    if beta.n != f.target.n:
        raise ValueError("congruence is over a different carrier")
    return Congruence.from_rep(beta.array[f.array])


def transport_congruence(f: SurjectiveMorphism, alpha: Congruence) -> Congruence:
    """f(α ∨ Ker f), a congruence of the target."""
    if alpha.n != f.source.n:
        raise ValueError("congruence is over a different carrier")
    wide = alpha.join(f.kernel())
    labels = np.full(f.target.n, -1, dtype=np.int64)
    labels[f.array] = wide.array
    return Congruence.from_rep(labels)


def product_congruence(alpha: Congruence, beta: Congruence) -> Congruence:
    """α × β on the product carrier i*|B| + j."""
    nb = beta.n
    labels = alpha.array.astype(np.int64)[:, None] * nb + beta.array[None, :]
    return Congruence.from_rep(labels.ravel())


def projections(a: FiniteAlgebra, b: FiniteAlgebra, prod: FiniteAlgebra) -> tuple[SurjectiveMorphism, SurjectiveMorphism]:
    nb = b.n
    idx = range(prod.n)
    return (
        SurjectiveMorphism(prod, a, tuple(i // nb for i in idx)),
        SurjectiveMorphism(prod, b, tuple(i % nb for i in idx)),
    )
