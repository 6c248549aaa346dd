"""One-call analysis of an algebra or a commutator structure."""
from __future__ import annotations

from .algebra import FiniteAlgebra
from .commutator import CommutatorStructure, classify, commutator_table, law_witness
from .congruence import enumerate_congruences, lattice_tests
from .errors import HypothesisError
from .lattice import FiniteBoundedLattice, identify
from .reticulation import build_reticulation
from .spectrum import max_in_spec, spectrum_report


_CACHE: dict[tuple, CommutatorStructure] = {}
_CACHE_LIMIT = 256


def structure_of(obj: FiniteAlgebra | CommutatorStructure, method: str = "translation") -> CommutatorStructure:
    """Con(A) with its commutator table, memoized on the algebra's contents."""
    if isinstance(obj, CommutatorStructure):
        return obj
    key = (obj.labels, obj.signature, tuple(t.tobytes() for t in obj.tables), obj.name,
           tuple(sorted((c.rep, n) for c, n in obj.congruence_names.items())), method)
    hit = _CACHE.get(key)
    if hit is None:
        if len(_CACHE) >= _CACHE_LIMIT:
            _CACHE.pop(next(iter(_CACHE)))
        hit = _CACHE[key] = commutator_table(obj, enumerate_congruences(obj), method=method)
    return hit


def lattice_summary(lat: FiniteBoundedLattice) -> dict:
    return {
        "elements": list(lat.labels),
        "covers": [[lat.labels[a], lat.labels[b]] for a, b in lat.covers],
        "isomorphic_to": identify(lat),
    }


def commutator_dict(cs: CommutatorStructure) -> dict:
    lab = cs.label
    return {lab(a): {lab(b): lab(cs.comm(a, b)) for b in range(cs.size)} for a in range(cs.size)}


def analyze(obj: FiniteAlgebra | CommutatorStructure, method: str = "translation") -> dict:
    """The full analysis as plain JSON-ready data."""
    cs = structure_of(obj, method)
    flags = cs.law_flags
    out: dict = {
        "name": cs.name,
        "provenance": cs.provenance,
        "congruences": lattice_summary(cs.lattice) | lattice_tests(cs.lattice),
        "commutator": commutator_dict(cs),
        "laws": dict(flags),
        "law_witnesses": {
            law: [cs.label(i) if isinstance(i, int) else i for i in law_witness(cs, law)]
            for law in flags
            if not flags[law]
        },
        "monotone": cs.monotone,
        "below_meet": cs.below_meet,
    }
    if cs.principal is not None:
        out["principal"] = [cs.label(i) for i in range(cs.size) if cs.principal[i]]
    c = classify(cs)
    out["classification"] = {
        "abelian": c.abelian,
        "solvable": c.solvable,
        "nilpotent": c.nilpotent,
        "solvable_n": c.solvable_n,
        "nilpotent_n": c.nilpotent_n,
    }
    sr = spectrum_report(cs)
    out["spectrum"] = sr.to_dict(cs)
    try:
        r = build_reticulation(cs)
        out["reticulation"] = r.to_dict() | {"lattice": lattice_summary(r.lattice)}
    except HypothesisError as exc:
        out["reticulation"] = {"refused": str(exc)}
    out["conditional"] = {"max_in_spec": max_in_spec(cs), "nabla_neutral": flags["nabla_neutral"]}
    return out
