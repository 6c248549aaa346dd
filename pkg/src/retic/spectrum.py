"""Prime spectrum, radicals, Boolean center, hyperarchimedean test.

Everything works on lattice indices of a ``CommutatorStructure``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .commutator import CommutatorStructure, iterated
from .errors import ConsistencyError, HypothesisError
from .report import Check, Report


def is_prime(cs: CommutatorStructure, phi: int) -> bool:
    if phi == cs.top:
        return False
    L = cs.lattice.leq
    below = L[cs.table, phi]
    col = L[:, phi]
    return bool(np.all(~below | col[:, None] | col[None, :]))


def is_semiprime(cs: CommutatorStructure, phi: int) -> bool:
    L = cs.lattice.leq
    diag = cs.table[np.arange(cs.size), np.arange(cs.size)]
    return bool(np.all(~L[diag, phi] | L[:, phi]))


def spectrum(cs: CommutatorStructure) -> list[int]:
    """Spec by the definition; cross-checked against meet-irreducible ∧ semiprime.

    The cross-check applies when the table is join-distributive, monotone
    and below the meet, which is enough for the two descriptions to agree.
    """
    primes = [p for p in range(cs.size) if is_prime(cs, p)]
    if cs.law_flags["join_distributive"] and cs.monotone and cs.below_meet:
        alt = [p for p in range(cs.size) if cs.lattice.meet_irreducible(p) and is_semiprime(cs, p)]
        if alt != primes:
            raise ConsistencyError(
                f"prime scan {[cs.label(p) for p in primes]} disagrees with meet-irreducible semiprimes"
                f" {[cs.label(p) for p in alt]}"
            )
    return primes


def maximal(cs: CommutatorStructure) -> list[int]:
    return sorted(cs.lattice.lower_covers(cs.top))


def radical(cs: CommutatorStructure, theta: int, method: str = "via_spec") -> int:
    """ρ(θ): meet of the primes above θ (empty meet = ∇), or the join of the
    principal α with some [α,α]^k ≤ θ."""
    L = cs.lattice.leq
    if method == "via_spec":
        return cs.lattice.meet_all(p for p in spectrum(cs) if L[theta, p])
    if method == "via_iteration":
        if cs.principal is None:
            raise HypothesisError("radical via iteration needs principal congruences")
        chosen = [a for a in range(cs.size) if cs.principal[a] and _some_power_below(cs, a, theta)]
        return cs.lattice.join_all(chosen)
    raise ValueError(f"unknown method {method!r}")


def _some_power_below(cs: CommutatorStructure, a: int, theta: int) -> bool:
    L = cs.lattice.leq
    cur = cs.comm(a, a)
    for _ in range(cs.size + 1):
        if L[cur, theta]:
            return True
        nxt = cs.comm(cur, cur)
        if nxt == cur:
            return False
        cur = nxt
    return False


def radical_map(cs: CommutatorStructure, method: str = "via_spec") -> list[int]:
    return [radical(cs, t, method) for t in range(cs.size)]


def radical_congruences(cs: CommutatorStructure) -> list[int]:
    return sorted(set(radical_map(cs)))


def stone_sets(cs: CommutatorStructure, theta: int) -> tuple[frozenset[int], frozenset[int]]:
    """(V(θ), D(θ)): primes above θ and the rest of Spec."""
    spec = spectrum(cs)
    v = frozenset(p for p in spec if cs.lattice.leq[theta, p])
    return v, frozenset(spec) - v


def is_semiprime_algebra(cs: CommutatorStructure) -> bool:
    return radical(cs, cs.bottom) == cs.bottom


def boolean_center(cs: CommutatorStructure) -> list[int]:
    return cs.lattice.complemented()


def boolean_center_report(cs: CommutatorStructure) -> Report:
    """With [θ,∇] = θ: B is a Boolean algebra under ∨, [·,·] = ∧ and ⊥."""
    rep = Report(f"Boolean center: {cs.name}")
    B = boolean_center(cs)
    lab = cs.label
    rep.add(Check("Δ, ∇ in B", cs.bottom in B and cs.top in B))
    if not cs.law_flags["nabla_neutral"]:
        rep.add(Check("Boolean algebra under ∨, ∧, ⊥", True, detail="skipped: [θ,∇] = θ fails", conditional=True))
        return rep
    J, M = cs.lattice.join, cs.lattice.meet
    bs = set(B)
    closed = all(int(J[a, b]) in bs and int(M[a, b]) in bs for a in B for b in B)
    rep.add(Check("B closed under ∨ and ∧", closed))
    comm_meet = [(lab(a), lab(b)) for a in B for b in B if cs.comm(a, b) != M[a, b]]
    rep.add(Check("[a,b] = a∧b on B", not comm_meet, witness=comm_meet[:3] or None))
    bad = []
    for a in B:
        p = _largest_annihilator(cs, a)
        if p is None or p not in bs or J[a, p] != cs.top or M[a, p] != cs.bottom:
            bad.append(lab(a))
    rep.add(Check("a⊥ is the complement of a", not bad, witness=bad or None))
    if closed:
        sub = cs.lattice.sublattice(B)
        rep.add(Check("B is a Boolean lattice", sub.is_boolean()))
    return rep


def _largest_annihilator(cs: CommutatorStructure, theta: int) -> int | None:
    # θ⊥ computed without assuming join-distributivity; None if no largest α exists
    ok = [a for a in range(cs.size) if cs.comm(a, theta) == cs.bottom]
    top = cs.lattice.join_all(ok)
    return top if top in ok else None


def hyperarchimedean_witnesses(cs: CommutatorStructure) -> dict[int, int | None]:
    """For each principal α the least n with [α,α]^n in B, or None."""
    if cs.principal is None:
        raise HypothesisError("hyperarchimedean test needs principal congruences")
    B = set(boolean_center(cs))
    out: dict[int, int | None] = {}
    for a in range(cs.size):
        if not cs.principal[a]:
            continue
        out[a] = None
        for n in range(1, cs.size + 2):
            if iterated(cs, a, a, n) in B:
                out[a] = n
                break
    return out


def is_hyperarchimedean(cs: CommutatorStructure) -> bool:
    return all(n is not None for n in hyperarchimedean_witnesses(cs).values())


def max_in_spec(cs: CommutatorStructure) -> bool:
    spec = set(spectrum(cs))
    return all(m in spec for m in maximal(cs))


@dataclass
class SpectrumReport:
    spec: list[int]
    max: list[int]
    radical_map: list[int]
    semiprime_algebra: bool
    boolean_center: list[int]
    hyperarchimedean: bool | None

    def to_dict(self, cs: CommutatorStructure) -> dict:
        lab = cs.label
        return {
            "spec": [lab(p) for p in self.spec],
            "max": [lab(m) for m in self.max],
            "radical": {lab(t): lab(r) for t, r in enumerate(self.radical_map)},
            "semiprime_algebra": self.semiprime_algebra,
            "boolean_center": [lab(b) for b in self.boolean_center],
            "hyperarchimedean": self.hyperarchimedean,
        }


def spectrum_report(cs: CommutatorStructure) -> SpectrumReport:
    rad = radical_map(cs)
    return SpectrumReport(
        spec=spectrum(cs),
        max=maximal(cs),
        radical_map=rad,
        semiprime_algebra=rad[cs.bottom] == cs.bottom,
        boolean_center=boolean_center(cs),
        hyperarchimedean=is_hyperarchimedean(cs) if cs.principal is not None else None,
    )


def spectrum_checks(cs: CommutatorStructure, max_n: int = 3) -> Report:
    """Closure-operator, Stone-set and semiprime identities on one structure."""
    rep = Report(f"spectrum: {cs.name}")
    m = cs.size
    L = cs.lattice.leq
    J, M = cs.lattice.join, cs.lattice.meet
    lab = cs.label
    rad = radical_map(cs)
    spec = spectrum(cs)

    rep.add(Check("primes are proper", all(p != cs.top for p in spec)))
    rep.add(Check("ρ(∇) = ∇", rad[cs.top] == cs.top))
    ext = [lab(t) for t in range(m) if not L[t, rad[t]]]
    rep.add(Check("θ ≤ ρ(θ)", not ext, witness=ext or None))
    idem = [lab(t) for t in range(m) if rad[rad[t]] != rad[t]]
    rep.add(Check("ρ(ρ(θ)) = ρ(θ)", not idem, witness=idem or None))
    mono = [(lab(a), lab(b)) for a in range(m) for b in range(m) if L[a, b] and not L[rad[a], rad[b]]]
    rep.add(Check("ρ is monotone", not mono, witness=mono[:3] or None))

    f = []
    for a in range(m):
        for b in range(m):
            want = int(M[rad[a], rad[b]])
            if rad[M[a, b]] != want:
                f.append((lab(a), lab(b), "meet"))
            for n in range(1, max_n + 1):
                if rad[iterated(cs, a, b, n)] != want:
                    f.append((lab(a), lab(b), n))
    rep.add(Check("ρ([a,b]^n) = ρ(a∧b) = ρ(a)∧ρ(b)", not f, witness=f[:3] or None))

    V = {t: stone_sets(cs, t) for t in range(m)}
    rep.add(Check("V(Δ) = Spec, D(Δ) = ∅", V[cs.bottom][0] == frozenset(spec) and not V[cs.bottom][1]))
    rep.add(Check("V(∇) = ∅", not V[cs.top][0]))
    f1 = [(lab(a), lab(b)) for a in range(m) for b in range(m) if V[cs.comm(a, b)][1] != V[a][1] & V[b][1]]
    rep.add(Check("D([a,b]) = D(a) ∩ D(b)", not f1, witness=f1[:3] or None))
    f2 = [(lab(a), lab(b)) for a in range(m) for b in range(m) if V[int(J[a, b])][0] != V[a][0] & V[b][0]]
    rep.add(Check("V(a∨b) = V(a) ∩ V(b)", not f2, witness=f2[:3] or None))

    if cs.principal is not None:
        f3 = []
        for a in range(m):
            if not cs.principal[a]:
                continue
            lhs = bool(L[a, rad[cs.bottom]])
            rhs = any(iterated(cs, a, a, k) == cs.bottom for k in range(1, m + 2))
            if lhs != rhs:
                f3.append(lab(a))
        rep.add(Check("principal α ≤ ρ(Δ) ⟺ [α,α]^k = Δ for some k", not f3, witness=f3 or None))

    if rad[cs.bottom] == cs.bottom:
        f4 = [(lab(a), lab(b)) for a in range(m) for b in range(m) if (cs.comm(a, b) == cs.bottom) != (M[a, b] == cs.bottom)]
        rep.add(Check("semiprime: [a,b] = Δ ⟺ a∧b = Δ", not f4, witness=f4[:3] or None))

    conditional = cs.law_flags["nabla_neutral"] and max_in_spec(cs)
    note = "" if conditional else "skipped: needs [θ,∇] = θ and Max ⊆ Spec"
    if conditional:
        f5 = [lab(t) for t in range(m) if (not V[t][0]) != (t == cs.top)]
        rep.add(Check("V(θ) = ∅ ⟺ θ = ∇", not f5, witness=f5 or None, conditional=True))
    else:
        rep.add(Check("V(θ) = ∅ ⟺ θ = ∇", True, detail=note, conditional=True))
    rep.add(Check("maximal congruences are prime", max_in_spec(cs), conditional=True,
                  detail="" if max_in_spec(cs) else "Max ⊄ Spec; the ambient variety is not semi-degenerate"))
    return rep
