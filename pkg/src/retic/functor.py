"""L on surjective morphisms, and the preservation theorems.

Verifiers return a ``Report``. They raise ``HypothesisError`` only when an
algebra involved cannot be reticulated at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .algebra import (
    FiniteAlgebra,
    SurjectiveMorphism,
    direct_product,
    product_congruence,
    quotient_algebra,
    transport_congruence,
)
from .analysis import structure_of
from .commutator import CommutatorStructure, iterated
from .congruence import cg_generate, enumerate_congruences
from .errors import ConsistencyError, HypothesisError, SignatureError
from .lattice import FiniteBoundedLattice, LatticeIdeal, is_lattice_morphism, lattice_iso, product
from .partition import Congruence
from .report import Check, Report
from .reticulation import ReticulationResult, build_reticulation, theta_star
from .spectrum import boolean_center, is_hyperarchimedean, max_in_spec, maximal, spectrum


def _con(cs: CommutatorStructure):
    if cs.con is None:
        raise HypothesisError("needs a structure computed from an algebra")
    return cs.con


def phi_f(f: SurjectiveMorphism, ra: ReticulationResult, rb: ReticulationResult, alpha: int) -> int:
    """Index in Con(B) of f(α ∨ Ker f)."""
    con_a, con_b = _con(ra.source), _con(rb.source)
    return con_b.index_of(transport_congruence(f, con_a.elements[alpha]))


@dataclass(eq=False)
class ReticMorphism:
    f: SurjectiveMorphism
    source: ReticulationResult
    target: ReticulationResult
    map: tuple[int, ...]

    def __call__(self, cls: int) -> int:
        return self.map[cls]

    @cached_property
    def kernel(self) -> LatticeIdeal:
        """Ker_Id: the classes sent to 0."""
        return LatticeIdeal(frozenset(c for c, v in enumerate(self.map) if v == self.target.lattice.bottom))

    def checks(self) -> Report:
        rep = Report("L(f)")
        rep.add(Check("surjective", set(self.map) == set(range(self.target.size))))
        rep.add(Check("bounded lattice morphism", is_lattice_morphism(self.source.lattice, self.target.lattice, self.map)))
        return rep


def retic_morphism(f: SurjectiveMorphism, ra: ReticulationResult, rb: ReticulationResult) -> ReticMorphism:
    """L(f)(λ_A(α)) = λ_B(φ_f(α)); every member of a class must agree."""
    phi = [phi_f(f, ra, rb, a) for a in range(ra.source.size)]
    out = []
    for cls, members in enumerate(ra.classes):
        images = {rb.lam[phi[a]] for a in members}
        if len(images) != 1:
            raise ConsistencyError(f"L(f) is not well defined on the class of {ra.lattice.labels[cls]}")
        out.append(images.pop())
    return ReticMorphism(f, ra, rb, tuple(out))


def reticulate_algebra(alg: FiniteAlgebra) -> ReticulationResult:
    return build_reticulation(structure_of(alg))


def _iso_check(name: str, a: FiniteBoundedLattice, b: FiniteBoundedLattice) -> Check:
    iso = lattice_iso(a, b)
    return Check(name, iso is not None, detail=f"{a.size} and {b.size} elements")


# -- quotients ------------------------------------------------------------------


def verify_quotient_preservation(alg: FiniteAlgebra, theta: Congruence, ra: ReticulationResult | None = None) -> Report:
    """L(A/θ) ≅ L(A)/θ*, and Ker_Id(L(p_θ)) = θ*."""
    ra = ra or reticulate_algebra(alg)
    con_a = _con(ra.source)
    t = con_a.index_of(theta)
    q, p = quotient_algebra(alg, theta)
    rb = reticulate_algebra(q)
    rep = Report(f"quotient by {con_a.label(t)}: {alg.name}")
    star = theta_star(ra, t)
    quot, cls_of = ra.lattice.quotient_by_ideal(star)
    rep.add(_iso_check("L(A/θ) ≅ L(A)/θ*", rb.lattice, quot))
    m = retic_morphism(p, ra, rb)
    rep.extend(m.checks(), prefix="L(p_θ): ")
    rep.add(Check("Ker_Id(L(p_θ)) = θ*", m.kernel == star, witness=None if m.kernel == star else sorted(m.kernel.members)))
    n = ra.size
    same = all((cls_of[x] == cls_of[y]) == (m(x) == m(y)) for x in range(n) for y in range(n))
    rep.add(Check("L(A)/θ* and the image of L(p_θ) have the same classes", same))
    return rep


def verify_functoriality(alg: FiniteAlgebra, theta: Congruence, zeta: Congruence) -> Report:
    """L(g∘f) = L(g)∘L(f) along A → A/θ → A/ζ for θ ≤ ζ."""
    if not theta.leq(zeta):
        raise ValueError("need θ ≤ ζ")
    ra = reticulate_algebra(alg)
    b, f = quotient_algebra(alg, theta)
    rb = reticulate_algebra(b)
    z_b = transport_congruence(f, zeta)
    c, g = quotient_algebra(b, z_b)
    rc = reticulate_algebra(c)
    lf, lg = retic_morphism(f, ra, rb), retic_morphism(g, rb, rc)
    lgf = retic_morphism(f.compose(g), ra, rc)
    rep = Report(f"functoriality: {alg.name}")
    rep.add(Check("L(g∘f) = L(g)∘L(f)", lgf.map == tuple(lg(lf(x)) for x in range(ra.size))))
    ident = retic_morphism(SurjectiveMorphism(alg, alg, tuple(range(alg.n))), ra, ra)
    rep.add(Check("L(id) = id", ident.map == tuple(range(ra.size))))
    return rep


def transport_checks(alg: FiniteAlgebra, theta: Congruence) -> Report:
    """φ_f(Con A) = Con B, and Boolean-center elements stay in the Boolean center."""
    ra = reticulate_algebra(alg)
    cs_a = ra.source
    q, p = quotient_algebra(alg, theta)
    cs_b = structure_of(q)
    rep = Report(f"transport along p_θ: {alg.name}")
    images = {cs_b.con.index_of(transport_congruence(p, c)) for c in cs_a.con.elements}
    rep.add(Check("φ_f is onto Con(A/θ)", images == set(range(cs_b.size))))
    if cs_a.law_flags["nabla_neutral"]:
        bb = set(boolean_center(cs_b))
        bad = [cs_a.label(a) for a in boolean_center(cs_a)
               if cs_b.con.index_of(transport_congruence(p, cs_a.con.elements[a])) not in bb]
        rep.add(Check("φ_f(B(Con A)) ⊆ B(Con A/θ)", not bad, witness=bad or None))
    principals = [i for i in range(cs_b.size) if cs_b.principal[i]]
    rep.add(Check("∇ is compact in A/θ", cs_b.lattice.join_all(principals) == cs_b.top))
    return rep


def commutator_quotient_check(alg: FiniteAlgebra, theta: Congruence, max_n: int = 3) -> Check:
    """[(α∨θ)/θ, (β∨θ)/θ]^n = ([α,β]^n ∨ θ)/θ for all α, β and n ≤ max_n."""
    cs = structure_of(alg)
    q, p = quotient_algebra(alg, theta)
    cq = structure_of(q)
    down = [cq.con.index_of(transport_congruence(p, c)) for c in cs.con.elements]
    fails = []
    for a in range(cs.size):
        for b in range(cs.size):
            for n in range(1, max_n + 1):
                lhs = iterated(cq, down[a], down[b], n)
                rhs = down[iterated(cs, a, b, n)]
                if lhs != rhs:
                    fails.append((cs.label(a), cs.label(b), n))
    return Check("[(α∨θ)/θ,(β∨θ)/θ]^n = ([α,β]^n∨θ)/θ", not fails, witness=fails[:3] or None)


# -- products ---------------------------------------------------------------------


def skew_congruences(a: FiniteAlgebra, b: FiniteAlgebra, prod: FiniteAlgebra | None = None) -> list[Congruence]:
    """Congruences of A×B that are not of the form α×β."""
    prod = prod or direct_product(a, b)
    # only Con is needed; the commutator table of a product can be costly
    ca, cb, cp = enumerate_congruences(a), enumerate_congruences(b), enumerate_congruences(prod)
    products = {product_congruence(x, y) for x in ca.elements for y in cb.elements}
    if len(cp) == len(ca) * len(cb) and products <= set(cp.elements):
        return []
    return [g for g in cp.elements if g not in products]


def verify_product_preservation(a: FiniteAlgebra, b: FiniteAlgebra, cg_pairs: int = 40) -> Report:
    if a.signature != b.signature:
        raise SignatureError("factors have different signatures")
    prod = direct_product(a, b)
    rep = Report(f"product {a.name} × {b.name}")
    skew = skew_congruences(a, b, prod)
    rep.add(Check("no skew congruences", not skew, witness=[g.format(prod.labels) for g in skew[:3]] or None))
    cs_a, cs_b, cs_p = structure_of(a), structure_of(b), structure_of(prod)
    if skew:
        rep.add(Check("Spec formula and L(A×B) ≅ L(A)×L(B)", True, detail="skipped: skew congruences", conditional=True))
        return rep

    nab_a, nab_b = cs_a.con.elements[cs_a.top], cs_b.con.elements[cs_b.top]
    want = {product_congruence(cs_a.con.elements[p], nab_b) for p in spectrum(cs_a)}
    want |= {product_congruence(nab_a, cs_b.con.elements[p]) for p in spectrum(cs_b)}
    got = {cs_p.con.elements[p] for p in spectrum(cs_p)}
    rep.add(Check("Spec(A×B) = {φ×∇} ∪ {∇×ψ}", got == want))

    ra, rb, rp = build_reticulation(cs_a), build_reticulation(cs_b), build_reticulation(cs_p)
    rep.add(_iso_check("L(A×B) ≅ L(A)×L(B)", rp.lattice, product(ra.lattice, rb.lattice)))

    # Cg(X×Y) = Cg(X)×Cg(Y) on single pairs X, Y
    na, nb = a.n, b.n
    pa = [(x, y) for x, y in combinations(range(na), 2)]
    pb = [(x, y) for x, y in combinations(range(nb), 2)]
    bad = []
    tried = 0
    for x in pa:
        for y in pb:
            if tried >= cg_pairs:
                break
            tried += 1
            lhs = cg_generate(prod, [(x[0] * nb + y[0], x[1] * nb + y[1])])
            rhs = product_congruence(cg_generate(a, [x]), cg_generate(b, [y]))
            if lhs != rhs:
                bad.append((a.labels[x[0]], a.labels[x[1]], b.labels[y[0]], b.labels[y[1]]))
    rep.add(Check("Cg(X×Y) = Cg(X)×Cg(Y)", not bad, detail=f"{tried} pairs", witness=bad[:3] or None))
    return rep


# -- semiprime reduction and hyperarchimedean battery ------------------------------


def _boolean_lattice(cs_or_lat) -> FiniteBoundedLattice | None:
    lat = cs_or_lat if isinstance(cs_or_lat, FiniteBoundedLattice) else cs_or_lat.lattice
    elems = lat.complemented()
    try:
        return lat.sublattice(elems)
    except ValueError:
        return None


def semidegenerate_surrogate(cs: CommutatorStructure) -> bool:
    return cs.law_flags["nabla_neutral"] and max_in_spec(cs)


def verify_semiprime_reduction(alg: FiniteAlgebra) -> Report:
    ra = reticulate_algebra(alg)
    cs = ra.source
    rho = cs.con.elements[ra.radical[cs.bottom]]
    q, _ = quotient_algebra(alg, rho)
    rq = reticulate_algebra(q)
    cq = rq.source
    rep = Report(f"semiprime reduction: {alg.name}")
    rep.add(Check("A/ρ(Δ) is semiprime", rq.radical[cq.bottom] == cq.bottom, detail=f"|A/ρ(Δ)| = {q.n}"))
    rep.add(_iso_check("L(A) ≅ L(A/ρ(Δ))", ra.lattice, rq.lattice))
    bl, bc = _boolean_lattice(ra.lattice), _boolean_lattice(cq)
    ok = bl is not None and bc is not None and lattice_iso(bl, bc) is not None
    # rests on semi-degeneracy of the variety; [θ,∇] = θ and Max ⊆ Spec stand in for it
    applies = semidegenerate_surrogate(cs)
    detail = f"{len(ra.lattice.complemented())} and {len(cq.lattice.complemented())} elements"
    if not applies:
        detail += "; [θ,∇] = θ or Max ⊆ Spec fails"
    rep.add(Check("B(L(A)) ≅ B(Con(A/ρ(Δ)))", ok, detail=detail, conditional=not applies))
    return rep


def hyperarchimedean_conditions(alg: FiniteAlgebra) -> dict[str, bool]:
    ra = reticulate_algebra(alg)
    cs = ra.source
    rho = cs.con.elements[ra.radical[cs.bottom]]
    q, _ = quotient_algebra(alg, rho)
    cq = structure_of(q)
    b_con, b_q = _boolean_lattice(cs), _boolean_lattice(cq)
    return {
        "A hyperarchimedean": is_hyperarchimedean(cs),
        "A/ρ(Δ) hyperarchimedean": is_hyperarchimedean(cq),
        "Max(A) = Spec(A)": maximal(cs) == spectrum(cs),
        "L(A) Boolean": ra.lattice.is_boolean(),
        "L(A) ≅ B(Con A)": b_con is not None and lattice_iso(ra.lattice, b_con) is not None,
        "L(A) ≅ B(Con A/ρ(Δ))": b_q is not None and lattice_iso(ra.lattice, b_q) is not None,
    }


def verify_hyperarchimedean_equivalences(alg: FiniteAlgebra) -> Report:
    """The six conditions must agree; only meaningful when Max ⊆ Spec."""
    cs = structure_of(alg)
    rep = Report(f"hyperarchimedean equivalences: {alg.name}")
    conds = hyperarchimedean_conditions(alg)
    applies = max_in_spec(cs)
    agree = len(set(conds.values())) == 1
    detail = ", ".join(f"{k}: {v}" for k, v in conds.items())
    if not applies:
        detail = "Max ⊄ Spec; " + detail
    rep.add(Check("the six conditions agree", agree, detail=detail, conditional=not applies))
    if conds["A hyperarchimedean"]:
        bad = []
        for theta in cs.con.elements:
            q, _ = quotient_algebra(alg, theta)
            if not is_hyperarchimedean(structure_of(q)):
                bad.append(theta.format(alg.labels))
        rep.add(Check("every quotient is hyperarchimedean", not bad, witness=bad or None, conditional=not applies))
        rep.add(Check("hyperarchimedean ⟹ L(A) Boolean", conds["L(A) Boolean"], conditional=not applies))
    return rep
