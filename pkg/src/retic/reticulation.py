"""The reticulation L(A), the θ*/I_* correspondence and the spectra homeomorphism.

For a finite algebra every congruence is compact, so L(A) is Con(A)
modulo "same radical". A class is labelled by its least congruence.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import FiniteAlgebra, make_algebra
from .commutator import CommutatorStructure, perp
from .errors import ConsistencyError, HypothesisError
from .lattice import FiniteBoundedLattice, LatticeIdeal, lattice_iso
from .report import Check, Report
from .spectrum import max_in_spec, radical_map, spectrum, stone_sets

REQUIRED_LAWS = ("commutative", "join_distributive")


def check_hypotheses(cs: CommutatorStructure) -> None:
    """Raise HypothesisError naming the first failing law.

    An empty spectrum is let through: every radical is then ∇ and L(A) is
    the one-element lattice whatever the commutator does.
    """
    if not spectrum(cs):
        return
    for law in REQUIRED_LAWS:
        if not cs.law_flags[law]:
            raise HypothesisError(f"{cs.name or 'structure'}: the commutator is not {law.replace('_', '-')}")


@dataclass(eq=False)
class ReticulationResult:
    source: CommutatorStructure
    radical: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    lam: tuple[int, ...]
    lattice: FiniteBoundedLattice

    @property
    def size(self) -> int:
        return self.lattice.size

    def least(self, cls: int) -> int:
        return self.classes[cls][0]

    def class_of(self, theta: int) -> int:
        return self.lam[theta]

    @cached_property
    def ideals(self) -> list[LatticeIdeal]:
        return self.lattice.ideals()

    @cached_property
    def prime_ideals(self) -> list[LatticeIdeal]:
        return self.lattice.prime_ideals()

    def to_dict(self) -> dict:
        lab = self.source.label
        return {
            "classes": {self.lattice.labels[c]: [lab(t) for t in members] for c, members in enumerate(self.classes)},
            "covers": [[self.lattice.labels[a], self.lattice.labels[b]] for a, b in self.lattice.covers],
        }


def build_reticulation(cs: CommutatorStructure) -> ReticulationResult:
    check_hypotheses(cs)
    rad = radical_map(cs)
    L = cs.lattice.leq
    by_radical: dict[int, list[int]] = {}
    for t, r in enumerate(rad):
        by_radical.setdefault(r, []).append(t)
    groups = []
    for members in by_radical.values():
        # each class is closed under ∧ (ρ(α∧β) = ρ(α)∧ρ(β)), so it has a least element
        least = cs.lattice.meet_all(members)
        if least not in members:
            raise ConsistencyError(f"class of {cs.label(members[0])} has no least element")
        groups.append(tuple([least] + sorted(t for t in members if t != least)))
    groups.sort(key=lambda g: g[0])
    lam = [0] * cs.size
    for c, g in enumerate(groups):
        for t in g:
            lam[t] = c
    radicals = [rad[g[0]] for g in groups]
    leq = L[np.ix_(radicals, radicals)]
    lat = FiniteBoundedLattice.from_leq([cs.label(g[0]) for g in groups], leq)

    lam_arr = np.asarray(lam)
    if not np.array_equal(lam_arr[cs.lattice.join], lat.join[lam_arr[:, None], lam_arr[None, :]]):
        raise ConsistencyError("λ does not respect joins")
    if not np.array_equal(lam_arr[cs.table], lat.meet[lam_arr[:, None], lam_arr[None, :]]):
        raise ConsistencyError("λ does not send [α,β] to the class meet")
    return ReticulationResult(cs, tuple(rad), tuple(groups), tuple(lam), lat)


def theta_star(r: ReticulationResult, theta: int) -> LatticeIdeal:
    """θ* = λ((θ])."""
    below = np.flatnonzero(r.source.lattice.leq[:, theta])
    return LatticeIdeal(frozenset(r.lam[int(a)] for a in below))


def ideal_lower_star(r: ReticulationResult, ideal: LatticeIdeal) -> int:
    """I_* = ⋁{α : λ(α) ∈ I}."""
    if not r.lattice.is_ideal(ideal.members):
        raise ValueError("not an ideal of L(A)")
    return r.source.lattice.join_all(t for t in range(r.source.size) if r.lam[t] in ideal.members)


def rcon_lattice(cs: CommutatorStructure) -> tuple[FiniteBoundedLattice, list[int]]:
    """Radical congruences ordered by inclusion; join is ρ(α∨β), meet is ∧."""
    check_hypotheses(cs)
    rad = radical_map(cs)
    elems = sorted(set(rad))
    lat = FiniteBoundedLattice.from_leq([cs.label(e) for e in elems], cs.lattice.leq[np.ix_(elems, elems)])
    pos = {e: i for i, e in enumerate(elems)}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if lat.join[i, j] != pos[rad[cs.lattice.join[a, b]]] or elems[lat.meet[i, j]] != cs.lattice.meet[a, b]:
                raise ConsistencyError(f"RCon operations disagree at {cs.label(a)}, {cs.label(b)}")
    return lat, elems


def lattice_algebra(lat: FiniteBoundedLattice, name: str = "") -> FiniteAlgebra:
    """A bounded lattice as an algebra with ∨, ∧, 0, 1."""
    return make_algebra(
        lat.labels,
        [("join", 2, lat.join), ("meet", 2, lat.meet), ("0", 0, lat.bottom), ("1", 0, lat.top)],
        name=name,
    )


# -- verifiers ---------------------------------------------------------------


def galois_checks(r: ReticulationResult) -> Report:
    cs = r.source
    lab = cs.label
    rep = Report(f"θ* and I_*: {cs.name}")
    stars = [theta_star(r, t) for t in range(cs.size)]
    not_ideal = [lab(t) for t, s in enumerate(stars) if not r.lattice.is_ideal(s.members)]
    rep.add(Check("θ* is an ideal", not not_ideal, witness=not_ideal or None))
    bad = [lab(t) for t in range(cs.size) if ideal_lower_star(r, stars[t]) != r.radical[t]]
    rep.add(Check("(θ*)_* = ρ(θ)", not bad, witness=bad or None))
    bad = [lab(t) for t in range(cs.size) if stars[r.radical[t]] != stars[t]]
    rep.add(Check("ρ(θ)* = θ*", not bad, witness=bad or None))
    bad = [sorted(i.members) for i in r.ideals if theta_star(r, ideal_lower_star(r, i)) != i]
    rep.add(Check("(I_*)* = I", not bad, witness=bad[:3] or None))

    rlat, elems = rcon_lattice(cs)
    idl, ideals = r.lattice.ideal_lattice()
    pos = {i: k for k, i in enumerate(ideals)}
    f = [pos[stars[e]] for e in elems]
    bij = sorted(f) == list(range(idl.size))
    iso = bij and all(
        idl.join[f[a], f[b]] == f[rlat.join[a, b]] and idl.meet[f[a], f[b]] == f[rlat.meet[a, b]]
        for a in range(rlat.size)
        for b in range(rlat.size)
    )
    back = all(ideal_lower_star(r, ideals[f[a]]) == elems[a] for a in range(rlat.size))
    rep.add(Check("θ ↦ θ* is an isomorphism RCon(A) → Id(L(A)) with inverse I ↦ I_*", iso and back))
    rep.add(Check("Id(L(A)) is distributive", idl.is_distributive()))
    return rep


def reticulation_checks(r: ReticulationResult) -> Report:
    cs = r.source
    lab = cs.label
    rep = Report(f"reticulation: {cs.name}")
    lam = np.asarray(r.lam)
    rep.add(Check("λ is surjective", set(r.lam) == set(range(r.size))))
    same = all(
        (r.lam[a] == r.lam[b]) == (r.radical[a] == r.radical[b]) for a in range(cs.size) for b in range(cs.size)
    )
    rep.add(Check("λ(α) = λ(β) ⟺ ρ(α) = ρ(β)", same))
    rep.add(Check("λ respects ∨", bool(np.array_equal(lam[cs.lattice.join], r.lattice.join[lam[:, None], lam[None, :]]))))
    rep.add(Check("λ([α,β]) = λ(α∧β)", bool(np.array_equal(lam[cs.table], lam[cs.lattice.meet]))))
    rep.add(Check("λ(Δ) = 0, λ(∇) = 1", r.lam[cs.bottom] == r.lattice.bottom and r.lam[cs.top] == r.lattice.top))
    rep.add(Check("L(A) is distributive", r.lattice.is_distributive(), witness=r.lattice.distributivity_witness()))

    if cs.law_flags["equals_meet"]:
        rlat, _ = rcon_lattice(cs)
        rep.add(Check("[α,β] = α∧β: RCon(A) = Con(A)", rlat.size == cs.size))
        rep.add(Check("[α,β] = α∧β: L(A) ≅ Con(A)", lattice_iso(r.lattice, cs.lattice) is not None))

    if max_in_spec(cs):
        top_cls = [lab(t) for t in range(cs.size) if (r.lam[t] == r.lattice.top) != (t == cs.top)]
        rep.add(Check("λ(α) = 1 ⟺ α = ∇", not top_cls, witness=top_cls or None, conditional=True))
    else:
        rep.add(Check("λ(α) = 1 ⟺ α = ∇", True, detail="skipped: Max ⊄ Spec", conditional=True))

    max_ids = set(r.lattice.max_ideals())
    prime_ids = set(r.prime_ideals)
    rep.add(Check("L(A) Boolean ⟺ maximal ideals = prime ideals", r.lattice.is_boolean() == (max_ids == prime_ids)))
    return rep


def verify_spec_homeomorphism(r: ReticulationResult) -> Report:
    """u(φ) = φ* and v(P) = P_* between Spec(A) and the prime ideals of L(A)."""
    cs = r.source
    lab = cs.label
    rep = Report(f"Spec homeomorphism: {cs.name}")
    spec = spectrum(cs)
    primes = r.prime_ideals
    u = {p: theta_star(r, p) for p in spec}
    v = {P: ideal_lower_star(r, P) for P in primes}
    bad = [lab(p) for p, P in u.items() if P not in primes]
    rep.add(Check("u(φ) is a prime ideal", not bad, witness=bad or None))
    bad = [sorted(P.members) for P, t in v.items() if t not in spec]
    rep.add(Check("v(P) is a prime congruence", not bad, witness=bad or None))
    rep.add(Check("v∘u = id on Spec(A)", all(v.get(u[p]) == p for p in spec)))
    rep.add(Check("u∘v = id on prime ideals", all(u.get(v[P]) == P for P in primes)))
    rep.add(Check("|Spec(A)| = |prime ideals of L(A)|", len(spec) == len(primes), detail=f"{len(spec)} and {len(primes)}"))

    bad = []
    for t in range(cs.size):
        star = theta_star(r, t)
        image = {u[p] for p in stone_sets(cs, t)[0]}
        closed = {P for P in primes if star.members <= P.members}
        if image != closed:
            bad.append(lab(t))
    rep.add(Check("u(V(θ)) = V(θ*)", not bad, witness=bad or None))
    n_closed_a = len({stone_sets(cs, t)[0] for t in range(cs.size)})
    n_closed_l = len({frozenset(P for P in primes if I.members <= P.members) for I in r.ideals})
    rep.add(Check("same number of closed sets", n_closed_a == n_closed_l, detail=f"{n_closed_a} and {n_closed_l}"))
    return rep


def annihilator_checks(r: ReticulationResult) -> Report:
    """(θ⊥)* vs Ann(θ*) and (I_*)⊥ vs Ann(I)_*: ⊆ always, = when semiprime."""
    cs = r.source
    lab = cs.label
    rep = Report(f"annihilators: {cs.name}")
    lat = r.lattice
    rep.add(Check("Ann(L) = {0}, Ann({0}) = L",
                  lat.annihilator(LatticeIdeal(frozenset(range(lat.size)))).members == {lat.bottom}
                  and lat.annihilator(LatticeIdeal(frozenset({lat.bottom}))).members == set(range(lat.size))))
    bad = [sorted(i.members) for i in r.ideals if not lat.is_ideal(lat.annihilator(i).members)]
    rep.add(Check("Ann(I) is an ideal", not bad, witness=bad[:3] or None))
    if not cs.law_flags["join_distributive"]:
        rep.add(Check("θ⊥ identities", True, detail="skipped: θ⊥ needs a join-distributive commutator", conditional=True))
        return rep
    semiprime = r.radical[cs.bottom] == cs.bottom
    sub1, eq1, sub2, eq2 = [], [], [], []
    for t in range(cs.size):
        lhs = theta_star(r, perp(cs, t)).members
        rhs = lat.annihilator(theta_star(r, t)).members
        if not lhs <= rhs:
            sub1.append(lab(t))
        if lhs != rhs:
            eq1.append(lab(t))
    for i in r.ideals:
        lhs = perp(cs, ideal_lower_star(r, i))
        rhs = ideal_lower_star(r, lat.annihilator(i))
        if not cs.lattice.leq[lhs, rhs]:
            sub2.append(sorted(i.members))
        if lhs != rhs:
            eq2.append(sorted(i.members))
    rep.add(Check("(θ⊥)* ⊆ Ann(θ*)", not sub1, witness=sub1 or None))
    rep.add(Check("(I_*)⊥ ⊆ Ann(I)_*", not sub2, witness=sub2[:3] or None))
    if semiprime:
        rep.add(Check("semiprime: (θ⊥)* = Ann(θ*)", not eq1, witness=eq1 or None))
        rep.add(Check("semiprime: (I_*)⊥ = Ann(I)_*", not eq2, witness=eq2[:3] or None))
    return rep
