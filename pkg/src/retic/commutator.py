"""Term-condition commutator, iterated commutators, and commutator laws.

Two engines compute [α, β]:

``matrix``
    Generates M(α, β) ≤ A⁴ from the columns (a,a,b,b), a α b, and
    (c,d,c,d), c β d, then grows δ from Δ until every matrix (x,y,z,w)
    has x δ y ⟺ z δ w.

``translation`` (default)
    Works inside A(β), the subalgebra of A² on the pairs of β. Changing
    the α-arguments of a term one at a time reduces the term condition to
    polynomials with a single α-variable, and these are exactly the unary
    polynomials of A(β). So δ satisfies C(α, β; δ) iff membership in δ is
    constant on the classes of Θ = Cg_{A(β)}{((a,a),(b,b)) : a α b}. The
    least such δ is the fixpoint of "add every node of a Θ-class that
    meets δ, then close under Cg_A". The work is one closure on |β| nodes
    instead of a subuniverse of A⁴, which keeps A×B-sized inputs cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .algebra import FiniteAlgebra, subuniverse_array
from .congruence import CongruenceLattice, cg_generate
from .errors import HypothesisError
from .lattice import FiniteBoundedLattice
from .partition import Congruence
from .report import Check, Report

LAW_FLAGS = ("commutative", "join_distributive", "equals_meet", "associative", "nabla_neutral")


# -- engines ---------------------------------------------------------------


class PairAlgebra:
    """A(β): the subalgebra of A² whose carrier is the relation β."""

    def __init__(self, alg: FiniteAlgebra, beta: Congruence):
        n = alg.n
        b = beta.array
        us, vs = np.nonzero(b[:, None] == b[None, :])
        self.u = us.astype(np.int64)
        self.v = vs.astype(np.int64)
        self.size = len(us)
        node = np.full(n * n, -1, dtype=np.int64)
        node[self.u * n + self.v] = np.arange(self.size)
        self.node = node
        self.n = n
        tables = []
        arities = []
        N = self.size
        for (op, k), tab in zip(alg.signature, alg.tables):
            if k == 0:
                c = int(tab)
                tables.append(np.asarray([node[c * n + c]], dtype=np.int32))
            else:
                if N ** k > 1 << 27:
                    raise ValueError(f"A(β) table for {op} would have {N ** k} entries")
                grid = np.ix_(*([np.arange(N)] * k))
                left = tab[tuple(self.u[g] for g in grid)].astype(np.int64)
                right = tab[tuple(self.v[g] for g in grid)].astype(np.int64)
                tables.append(node[left * n + right].astype(np.int32).ravel())
            arities.append(k)
        self.tables = tables
        self.arities = arities

    def theta(self, alpha: Congruence) -> np.ndarray:
        """Θ-class representative of every node."""
        gens = alpha.generators()
        n = self.n
        diag_a = self.node[gens[:, 0].astype(np.int64) * (n + 1)]
        diag_b = self.node[gens[:, 1].astype(np.int64) * (n + 1)]
        seeds = np.stack([diag_a, diag_b], axis=1).astype(np.int32)
        return kernels.cg_closure(self.tables, self.arities, self.size, seeds)


def _least_delta(alg: FiniteAlgebra, left: np.ndarray, right: np.ndarray, theta: np.ndarray) -> Congruence:
    """Least congruence whose membership is constant on each Θ-class.

    ``left``/``right`` give the pair carried by each node; ``theta`` its class.
    """
    delta = Congruence.identity(alg.n)
    while True:
        d = delta.array
        inside = d[left] == d[right]
        hit = np.zeros(len(theta), dtype=bool)
        hit[theta[inside]] = True
        pull = hit[theta] & ~inside
        if not pull.any():
            return delta
        seeds = np.concatenate([delta.generators(), np.stack([left[pull], right[pull]], axis=1)])
        delta = cg_generate(alg, seeds)


def _tc_translation(alg: FiniteAlgebra, alpha: Congruence, beta: Congruence, pair_alg: PairAlgebra | None = None) -> Congruence:
    if alpha.meet(beta).is_identity():
        # [α,β] ≤ α∧β
        return Congruence.identity(alg.n)
    pa = pair_alg if pair_alg is not None else PairAlgebra(alg, beta)
    theta = pa.theta(alpha)
    return _least_delta(alg, pa.u, pa.v, np.asarray(theta, dtype=np.int64))


def commutator_matrices(alg: FiniteAlgebra, alpha: Congruence, beta: Congruence) -> np.ndarray:
    """M(α, β) as an (m, 4) array of (x, y, z, w) = rows (x y / z w)."""
    pa = alpha.pairs()
    pb = beta.pairs()
    gens = np.concatenate(
        [
            np.stack([pa[:, 0], pa[:, 0], pa[:, 1], pa[:, 1]], axis=1),
            np.stack([pb[:, 0], pb[:, 1], pb[:, 0], pb[:, 1]], axis=1),
        ]
    )
    return subuniverse_array(alg, 4, gens)


def _tc_matrix(alg: FiniteAlgebra, alpha: Congruence, beta: Congruence) -> Congruence:
    mats = commutator_matrices(alg, alpha, beta).astype(np.int64)
    x, y, z, w = mats.T
    delta = Congruence.identity(alg.n)
    while True:
        d = delta.array
        top = d[x] == d[y]
        bottom = d[z] == d[w]
        add_bottom = top & ~bottom
        add_top = bottom & ~top
        if not (add_bottom.any() or add_top.any()):
            return delta
        seeds = np.concatenate(
            [
                delta.generators(),
                np.stack([z[add_bottom], w[add_bottom]], axis=1),
                np.stack([x[add_top], y[add_top]], axis=1),
            ]
        )
        delta = cg_generate(alg, seeds)


def tc_commutator(alg: FiniteAlgebra, lat: CongruenceLattice | None, alpha: Congruence, beta: Congruence, method: str = "translation") -> Congruence:
    """[α, β]_A by the term condition."""
    for c in (alpha, beta):
        if c.n != alg.n:
            raise ValueError("congruence is over a different carrier")
        if lat is not None:
            if c not in lat.index:
                raise ValueError(f"{c.format(alg.labels)} is not a congruence of this algebra")
        else:
            from .algebra import compatibility_violation

            if compatibility_violation(alg, c) is not None:
                raise ValueError(f"{c.format(alg.labels)} is not a congruence of this algebra")
    if method == "translation":
        return _tc_translation(alg, alpha, beta)
    if method == "matrix":
        return _tc_matrix(alg, alpha, beta)
    raise ValueError(f"unknown method {method!r}")


# -- the structure -----------------------------------------------------------


@dataclass(eq=False)
class CommutatorStructure:
    """A finite bounded lattice with a binary commutator table.

    ``table[a, b]`` is the index of [a, b]. Structures computed from an
    algebra also carry the congruences and the principal marks.
    """

    lattice: FiniteBoundedLattice
    table: np.ndarray
    provenance: str
    name: str = ""
    principal: tuple[bool, ...] | None = None
    con: CongruenceLattice | None = field(default=None, repr=False)

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        m = self.lattice.size
        if t.shape != (m, m):
            raise ValueError("commutator table must be |L| x |L|")
        if t.size and (t.min() < 0 or t.max() >= m):
            raise ValueError("commutator table leaves the lattice")
        t.flags.writeable = False
        self.table = t

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def algebra(self) -> FiniteAlgebra | None:
        return self.con.algebra if self.con is not None else None

    def label(self, i: int) -> str:
        return self.lattice.labels[i]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.lattice.leq[a, b])

    def comm(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def law_flags(self) -> dict[str, bool]:
        return {name: law_witness(self, name) is None for name in LAW_FLAGS}

    @cached_property
    def monotone(self) -> bool:
        return _monotone_witness(self) is None

    @cached_property
    def below_meet(self) -> bool:
        return bool(self.lattice.leq[self.table, self.lattice.meet].all())


def law_witness(cs: CommutatorStructure, law: str):
    """A counterexample tuple for a law flag, or None if it holds everywhere."""
    T = cs.table
    J, M = cs.lattice.join, cs.lattice.meet
    m = cs.size
    idx = np.arange(m)
    if law == "commutative":
        bad = np.argwhere(T != T.T)
    elif law == "equals_meet":
        bad = np.argwhere(T != M)
    elif law == "nabla_neutral":
        bad = np.argwhere(T[:, cs.top] != idx)
    elif law == "associative":
        lhs = T[T[:, :, None], idx[None, None, :]]
        rhs = T[idx[:, None, None], T[None, :, :]]
        bad = np.argwhere(lhs != rhs)
    elif law == "join_distributive":
        # [a, b∨c] = [a,b]∨[a,c] and [b∨c, a] = [b,a]∨[c,a]
        right = T[idx[:, None, None], J[None, :, :]] != J[T[:, :, None], T[:, None, :]]
        left = T[J[:, :, None], idx[None, None, :]] != J[T[:, None, :], T[None, :, :]]
        bad = np.argwhere(right | left)
    else:
        raise ValueError(f"unknown law {law!r}")
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def _monotone_witness(cs: CommutatorStructure):
    L = cs.lattice.leq
    T = cs.table
    # single-argument steps suffice
    for a in range(cs.size):
        for a2 in np.flatnonzero(L[a]):
            if not L[T[a], T[a2]].all():
                b = int(np.flatnonzero(~L[T[a], T[a2]])[0])
                return (a, int(a2), b, "left")
            if not L[T[:, a], T[:, a2]].all():
                b = int(np.flatnonzero(~L[T[:, a], T[:, a2]])[0])
                return (a, int(a2), b, "right")
    return None


def commutator_table(alg: FiniteAlgebra, lat: CongruenceLattice, method: str = "translation") -> CommutatorStructure:
    """The full |Con A|² commutator table."""
    m = len(lat)
    table = np.empty((m, m), dtype=np.int64)
    elems = lat.elements
    for b, beta in enumerate(elems):
        pair_alg = None
        for a, alpha in enumerate(elems):
            if method == "matrix":
                c = _tc_matrix(alg, alpha, beta)
            elif alpha.meet(beta).is_identity():
                c = Congruence.identity(alg.n)
            else:
                if pair_alg is None:
                    pair_alg = PairAlgebra(alg, beta)
                c = _tc_translation(alg, alpha, beta, pair_alg)
            table[a, b] = lat.index_of(c)
    return CommutatorStructure(
        lattice=lat.lattice,
        table=table,
        provenance="computed-from-algebra",
        name=alg.name,
        principal=lat.principal,
        con=lat,
    )


# -- iteration and classification --------------------------------------------


def iterated(cs: CommutatorStructure, a: int, b: int, n: int, mode: str = "square") -> int:
    """[a,b]^n (mode "square") or (a,b]^n (mode "left")."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if mode not in ("square", "left"):
        raise ValueError(f"unknown mode {mode!r}")
    cur = cs.comm(a, b)
    for _ in range(n - 1):
        nxt = cs.comm(cur, cur) if mode == "square" else cs.comm(a, cur)
        if nxt == cur:
            break
        cur = nxt
    return cur


def _descent(cs: CommutatorStructure, mode: str) -> int | None:
    """Least n with the n-th iterate of ∇ equal to Δ, or None."""
    top, bottom = cs.top, cs.bottom
    cur = cs.comm(top, top)
    for n in range(1, cs.size + 2):
        if cur == bottom:
            return n
        nxt = cs.comm(cur, cur) if mode == "square" else cs.comm(top, cur)
        if nxt == cur:
            return None
        cur = nxt
    return None


@dataclass(frozen=True)
class Classification:
    abelian: bool
    solvable: bool
    nilpotent: bool
    solvable_n: int | None
    nilpotent_n: int | None


def classify(cs: CommutatorStructure) -> Classification:
    s = _descent(cs, "square")
    p = _descent(cs, "left")
    return Classification(
        abelian=cs.comm(cs.top, cs.top) == cs.bottom,
        solvable=s is not None,
        nilpotent=p is not None,
        solvable_n=s,
        nilpotent_n=p,
    )


# -- residuation ------------------------------------------------------------------


def _require_join_distributive(cs: CommutatorStructure, what: str):
    if not cs.law_flags["join_distributive"]:
        w = law_witness(cs, "join_distributive")
        raise HypothesisError(f"{what} needs a join-distributive commutator; fails at {tuple(cs.label(i) for i in w)}")


def residuation(cs: CommutatorStructure, theta: int, zeta: int) -> int:
    """θ → ζ: the largest α with [θ, α] ≤ ζ."""
    _require_join_distributive(cs, "residuation")
    L = cs.lattice.leq
    ok = [a for a in range(cs.size) if L[cs.comm(theta, a), zeta]]
    out = cs.lattice.join_all(ok)
    if not L[cs.comm(theta, out), zeta]:
        raise HypothesisError("the join of the admissible congruences is not admissible")
    return out


def perp(cs: CommutatorStructure, theta: int) -> int:
    """θ⊥: the largest α with [α, θ] = Δ."""
    _require_join_distributive(cs, "the annihilator θ⊥")
    ok = [a for a in range(cs.size) if cs.comm(a, theta) == cs.bottom]
    out = cs.lattice.join_all(ok)
    if cs.comm(out, theta) != cs.bottom:
        raise HypothesisError("the join of the annihilating congruences does not annihilate")
    return out


def property_a_omega(cs: CommutatorStructure, omega: Sequence[int] | None = None, n_max: int = 3, k_max: int = 6) -> Report:
    """Bounded search for k with [[α,α]^k,[β,β]^k] ≤ [α,β]^n.

    A miss up to ``k_max`` is reported, not treated as a refutation.
    """
    omega = list(range(cs.size)) if omega is None else list(omega)
    L = cs.lattice.leq
    rep = Report("property (A, Ω) diagnostic")
    misses = []
    for a in omega:
        for b in omega:
            for n in range(1, n_max + 1):
                target = iterated(cs, a, b, n)
                if not any(
                    L[cs.comm(iterated(cs, a, a, k), iterated(cs, b, b, k)), target] for k in range(1, k_max + 1)
                ):
                    misses.append((cs.label(a), cs.label(b), n))
    rep.add(Check("k found for every pair", not misses, witness=misses[:5] or None, conditional=True))
    return rep


# -- law checks -------------------------------------------------------------------


def law_checks(cs: CommutatorStructure, max_n: int = 3) -> Report:
    """Laws that only need the table: bounds, monotonicity and arithmetic.

    Results are pass/fail checks with a witness on failure.
    """
    rep = Report(f"commutator laws: {cs.name}")
    L = cs.lattice.leq
    J, M = cs.lattice.join, cs.lattice.meet
    m = cs.size
    lab = cs.label
    idx = range(m)

    bad = np.argwhere(~L[cs.table, M])
    rep.add(Check("[a,b] ≤ a∧b", len(bad) == 0, witness=_lab2(cs, bad)))

    w = _monotone_witness(cs)
    rep.add(Check("monotone in both arguments", w is None, witness=None if w is None else (lab(w[0]), lab(w[1]), lab(w[2]), w[3])))

    # join-distributivity is a hypothesis of the later results, not a law of every algebra
    w = law_witness(cs, "join_distributive")
    rep.add(Check("distributive over binary joins", w is None, witness=None if w is None else tuple(lab(i) for i in w),
                  conditional=True))
    standing = cs.law_flags["commutative"] and cs.law_flags["join_distributive"]

    # monotonicity of iterates and descent in n
    fails = []
    for a in idx:
        for b in idx:
            for n in range(1, max_n + 1):
                if not L[iterated(cs, a, b, n + 1), iterated(cs, a, b, n)]:
                    fails.append((lab(a), lab(b), n))
    rep.add(Check("[a,b]^(n+1) ≤ [a,b]^n", not fails, witness=fails[:3] or None))

    fails = []
    for a in idx:
        for a2 in np.flatnonzero(L[a]):
            for b in idx:
                for b2 in np.flatnonzero(L[b]):
                    for n in range(1, max_n + 1):
                        if not L[iterated(cs, a, b, n), iterated(cs, int(a2), int(b2), n)]:
                            fails.append((lab(a), lab(int(a2)), lab(b), lab(int(b2)), n))
    rep.add(Check("iterates are monotone", not fails, witness=fails[:3] or None))

    # [a,b]^(n+1) = [[a,b],[a,b]]^n
    fails = []
    for a in idx:
        for b in idx:
            c = cs.comm(a, b)
            for n in range(1, 5):
                if iterated(cs, a, b, n + 1) != iterated(cs, c, c, n):
                    fails.append((lab(a), lab(b), n))
    rep.add(Check("[a,b]^(n+1) = [[a,b],[a,b]]^n, n ≤ 4", not fails, witness=fails[:3] or None))

    if cs.law_flags["associative"]:
        fails = []
        for a in idx:
            for b in idx:
                for n in range(1, 4):
                    if iterated(cs, a, b, n + 1) != cs.comm(iterated(cs, a, a, n), iterated(cs, b, b, n)):
                        fails.append((lab(a), lab(b), n))
        rep.add(Check("associative: [a,b]^(n+1) = [[a,a]^n,[b,b]^n]", not fails, witness=fails[:3] or None))

    later = arithmetic_checks(cs, max_n=max_n, max_k=3)
    if cs.law_flags["nabla_neutral"]:
        later += nabla_neutral_checks(cs, max_n=max_n)
    for check in later:
        if not standing:
            check.conditional = True
            check.detail = "needs a commutative, join-distributive commutator"
        rep.add(check)
    return rep


def _lab2(cs, bad):
    if len(bad) == 0:
        return None
    a, b = (int(v) for v in bad[0])
    return (cs.label(a), cs.label(b))


def arithmetic_checks(cs: CommutatorStructure, max_n: int = 3, max_k: int = 3) -> list[Check]:
    """The join/power inequalities for self-commutators of joins."""
    L = cs.lattice.leq
    J = cs.lattice.join
    lab = cs.label
    m = cs.size

    def sq(a, n):
        return iterated(cs, a, a, n)

    out = []
    f4, f5, f6 = [], [], []
    for a in range(m):
        for b in range(m):
            ab = int(J[a, b])
            for n in range(1, max_n + 1):
                if not L[sq(ab, n), J[a, sq(b, n)]]:
                    f4.append((lab(a), lab(b), n))
                if not L[sq(ab, n * n), J[sq(a, n), sq(b, n)]]:
                    f6.append((lab(a), lab(b), n))
                for k in range(1, max_k + 1):
                    if not L[sq(ab, n * k), J[sq(a, k), sq(b, n)]]:
                        f5.append((lab(a), lab(b), n, k))
    out.append(Check("[a∨b,a∨b]^n ≤ a ∨ [b,b]^n", not f4, witness=f4[:3] or None))
    out.append(Check("[a∨b,a∨b]^(nk) ≤ [a,a]^k ∨ [b,b]^n", not f5, witness=f5[:3] or None))
    out.append(Check("[a∨b,a∨b]^(n²) ≤ [a,a]^n ∨ [b,b]^n", not f6, witness=f6[:3] or None))

    f7 = []
    for k in range(1, max_k + 1):
        for combo in _tuples(m, k):
            top = cs.lattice.join_all(combo)
            for n in range(1, max_n + 1):
                bound = cs.lattice.join_all(sq(a, n) for a in combo)
                if not L[sq(top, n ** k), bound]:
                    f7.append((tuple(lab(a) for a in combo), n))
    out.append(Check("[a1∨…∨ak, …]^(n^k) ≤ ∨ [ai,ai]^n, k ≤ 3", not f7, witness=f7[:3] or None))
    return out


def _tuples(m: int, k: int):
    # non-decreasing k-tuples; the statement is symmetric in the ai
    if k == 0:
        yield ()
        return
    for rest in _tuples(m, k - 1):
        start = rest[-1] if rest else 0
        for a in range(start, m):
            yield rest + (a,)


def nabla_neutral_checks(cs: CommutatorStructure, max_n: int = 3) -> list[Check]:
    """Consequences of [θ, ∇] = θ: coprime pairs and the Boolean center."""
    J, M = cs.lattice.join, cs.lattice.meet
    top, bottom = cs.top, cs.bottom
    lab = cs.label
    m = cs.size
    f1, f2, f3, fm = [], [], [], []
    for a in range(m):
        for b in range(m):
            if J[a, b] != top:
                continue
            if cs.comm(a, b) != M[a, b]:
                f1.append((lab(a), lab(b)))
            for n in range(1, max_n + 1):
                if J[iterated(cs, a, a, n), iterated(cs, b, b, n)] != top:
                    f3.append((lab(a), lab(b), n))
            for c in range(m):
                if J[a, c] != top:
                    continue
                if not (J[a, cs.comm(b, c)] == J[a, M[b, c]] == top):
                    f2.append((lab(a), lab(b), lab(c)))
    center = cs.lattice.complemented()
    for a in center:
        for t in range(m):
            if cs.comm(a, t) != M[a, t]:
                fm.append((lab(a), lab(t)))
    return [
        Check("a∨b = ∇ ⟹ [a,b] = a∧b", not f1, witness=f1[:3] or None),
        Check("a∨b = a∨c = ∇ ⟹ a∨[b,c] = a∨(b∧c) = ∇", not f2, witness=f2[:3] or None),
        Check("a∨b = ∇ ⟹ [a,a]^n ∨ [b,b]^n = ∇", not f3, witness=f3[:3] or None),
        Check("complemented a: [a,t] = a∧t", not fm, witness=fm[:3] or None),
    ]


def residuation_checks(cs: CommutatorStructure) -> list[Check]:
    if not cs.law_flags["join_distributive"]:
        return [Check("residuation", True, detail="skipped: commutator not join-distributive", conditional=True)]
    L = cs.lattice.leq
    lab = cs.label
    m = cs.size
    imp = [[residuation(cs, b, c) for c in range(m)] for b in range(m)]
    f1 = [
        (lab(a), lab(b), lab(c))
        for a in range(m)
        for b in range(m)
        for c in range(m)
        if bool(L[cs.comm(a, b), c]) != bool(L[a, imp[b][c]])
    ]
    out = [Check("[a,b] ≤ c ⟺ a ≤ b→c", not f1, witness=f1[:3] or None)]
    f2 = [lab(t) for t in range(m) if imp[t][cs.top] != cs.top]
    out.append(Check("t→∇ = ∇", not f2, witness=f2[:3] or None))
    f3 = [lab(s) for s in range(m) if perp(cs, s) != imp[s][cs.bottom] and cs.law_flags["commutative"]]
    out.append(Check("t⊥ = t→Δ", not f3, witness=f3[:3] or None))
    if cs.law_flags["nabla_neutral"]:
        f4 = [(lab(a), lab(b)) for a in range(m) for b in range(m) if (imp[a][b] == cs.top) != bool(L[a, b])]
        out.append(Check("a→b = ∇ ⟺ a ≤ b", not f4, witness=f4[:3] or None))
    return out


# -- checks that need the algebra ------------------------------------------------


def subalgebra_check(alg: FiniteAlgebra, cs: CommutatorStructure, elements: Sequence[int]) -> Check:
    """[α∩S², β∩S²]_S ≤ [α,β]_A ∩ S² for all α, β."""
    from .algebra import subalgebra
    from .congruence import enumerate_congruences

    sub, incl = subalgebra(alg, elements)
    slat = enumerate_congruences(sub)
    scs = commutator_table(sub, slat)
    incl = np.asarray(incl)
    fails = []
    con = cs.con
    for a, alpha in enumerate(con.elements):
        ra = Congruence.from_rep(alpha.array[incl])
        for b, beta in enumerate(con.elements):
            rb = Congruence.from_rep(beta.array[incl])
            small = slat.elements[scs.comm(slat.index_of(ra), slat.index_of(rb))]
            big = con.elements[cs.comm(a, b)]
            restricted = Congruence.from_rep(big.array[incl])
            if not small.leq(restricted):
                fails.append((cs.label(a), cs.label(b)))
    return Check("[α∩S²,β∩S²]_S ≤ [α,β]_A∩S²", not fails, witness=fails[:3] or None)


def product_check(a: FiniteAlgebra, b: FiniteAlgebra, pairs: Sequence[tuple[int, int, int, int]] | None = None) -> Check:
    """[α×α', β×β'] = [α,β]×[α',β'] over all (or the given) index quadruples."""
    from .algebra import direct_product, product_congruence
    from .congruence import enumerate_congruences

    la, lb = enumerate_congruences(a), enumerate_congruences(b)
    ca, cb = commutator_table(a, la), commutator_table(b, lb)
    prod = direct_product(a, b)
    if pairs is None:
        pairs = [(i, j, k, l) for i in range(len(la)) for j in range(len(lb)) for k in range(len(la)) for l in range(len(lb))]
    cache: dict[int, PairAlgebra] = {}
    fails = []
    for i, j, k, l in pairs:
        left = product_congruence(la.elements[i], lb.elements[j])
        right = product_congruence(la.elements[k], lb.elements[l])
        key = (k, l)
        if key not in cache and not left.meet(right).is_identity():
            cache[key] = PairAlgebra(prod, right)
        got = _tc_translation(prod, left, right, cache.get(key))
        want = product_congruence(la.elements[ca.comm(i, k)], lb.elements[cb.comm(j, l)])
        if got != want:
            fails.append((i, j, k, l))
    return Check("[α×α',β×β'] = [α,β]×[α',β']", not fails, witness=fails[:3] or None)
