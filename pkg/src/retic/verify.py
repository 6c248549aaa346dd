"""The full theorem battery for one algebra or commutator structure."""
from __future__ import annotations

import numpy as np

from .algebra import FiniteAlgebra
from .analysis import structure_of
from .commutator import CommutatorStructure, commutator_table, law_checks, property_a_omega, residuation_checks
from .errors import HypothesisError
from .functor import (
    commutator_quotient_check,
    transport_checks,
    verify_functoriality,
    verify_hyperarchimedean_equivalences,
    verify_quotient_preservation,
    verify_semiprime_reduction,
)
from .report import Check, Report
from .reticulation import (
    annihilator_checks,
    build_reticulation,
    galois_checks,
    reticulation_checks,
    verify_spec_homeomorphism,
)
from .spectrum import boolean_center_report, radical_map, spectrum_checks


def _guarded(rep: Report, name: str, fn, *args) -> None:
    """Run a sub-battery; a hypothesis refusal becomes a skipped entry."""
    try:
        rep.extend(fn(*args), prefix=f"{name}: ")
    except HypothesisError as exc:
        rep.add(Check(name, False, detail=f"not applicable: {exc}", conditional=True))


def structure_battery(cs: CommutatorStructure) -> Report:
    rep = Report(f"verify {cs.name}")
    rep.extend(law_checks(cs), prefix="laws: ")
    for c in residuation_checks(cs):
        rep.add(Check("residuation: " + c.name, c.passed, c.detail, c.witness, c.conditional))
    rep.extend(property_a_omega(cs), prefix="diagnostic: ")
    rep.extend(spectrum_checks(cs), prefix="spectrum: ")
    rep.extend(boolean_center_report(cs), prefix="Boolean center: ")
    if cs.principal is not None:
        ok = radical_map(cs) == radical_map(cs, "via_iteration")
        rep.add(Check("radical: meet of primes = join of nilpotent principals", ok))
    try:
        r = build_reticulation(cs)
    except HypothesisError as exc:
        rep.add(Check("reticulation", False, detail=f"not applicable: {exc}", conditional=True))
        return rep
    rep.extend(reticulation_checks(r), prefix="L(A): ")
    rep.extend(galois_checks(r), prefix="θ*/I_*: ")
    rep.extend(verify_spec_homeomorphism(r), prefix="Spec: ")
    rep.extend(annihilator_checks(r), prefix="Ann: ")
    return rep


def algebra_battery(alg: FiniteAlgebra, cs: CommutatorStructure | None = None) -> Report:
    cs = cs or structure_of(alg)
    rep = structure_battery(cs)
    other = commutator_table(alg, cs.con, method="matrix")
    same = np.array_equal(other.table, cs.table)
    rep.add(Check("commutator: translation and matrix engines agree", bool(same)))
    con = cs.con
    bottom, top = con.elements[cs.bottom], con.elements[cs.top]
    for i, theta in enumerate(con.elements):
        name = con.label(i)
        _guarded(rep, f"quotient by {name}", verify_quotient_preservation, alg, theta)
        _guarded(rep, f"transport to A/{name}", transport_checks, alg, theta)
        _guarded(rep, f"functor via {name}", verify_functoriality, alg, bottom, theta)
        _guarded(rep, f"functor through {name}", verify_functoriality, alg, theta, top)
        c = commutator_quotient_check(alg, theta)
        rep.add(Check(f"quotient by {name}: " + c.name, c.passed, c.detail, c.witness))
    _guarded(rep, "semiprime reduction", verify_semiprime_reduction, alg)
    _guarded(rep, "hyperarchimedean", verify_hyperarchimedean_equivalences, alg)
    return rep


def battery(obj: FiniteAlgebra | CommutatorStructure) -> Report:
    if isinstance(obj, CommutatorStructure):
        return structure_battery(obj)
    return algebra_battery(obj)
