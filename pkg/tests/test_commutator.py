import numpy as np
import pytest
from hypothesis import given, settings

from oracles import coset_congruence, group_commutator_table
from retic.algebra import direct_product, quotient_algebra
from retic.analysis import structure_of
from retic.commutator import (
    CommutatorStructure,
    classify,
    commutator_table,
    iterated,
    law_checks,
    law_witness,
    product_check,
    subalgebra_check,
    tc_commutator,
)
from retic.congruence import enumerate_congruences
from retic.errors import SignatureError
from retic.functor import commutator_quotient_check
from retic.io import load
from retic.lattice import chain
from strategies import algebras

LATTICES = ["lattice-e", "lattice-p", "lattice-d", "chain-2", "chain-3", "chain-4"]


@pytest.mark.parametrize("name", ["c8", "s3"])
def test_groups_match_subgroup_commutator(name):
    alg = load(name)
    cs = structure_of(alg)
    subs, table = group_commutator_table(alg)
    idx = [cs.con.index_of(coset_congruence(alg, h)) for h in subs]
    for i, a in enumerate(idx):
        for j, b in enumerate(idx):
            assert cs.comm(a, b) == idx[table[i][j]]


def test_c8_diagonal():
    # proper subgroups of C8 are abelian; only [∇,∇] is nontrivial
    cs = structure_of(load("c8"))
    diag = {cs.label(i): cs.label(cs.comm(i, i)) for i in range(cs.size)}
    assert diag == {"Δ": "Δ", "<-1>": "Δ", "<i>": "Δ", "<j>": "Δ", "<k>": "Δ", "∇": "<-1>"}


@pytest.mark.parametrize("name", LATTICES)
def test_lattices_commutator_is_meet(name):
    cs = structure_of(load(name))
    assert cs.law_flags["equals_meet"]
    assert np.array_equal(cs.table, cs.lattice.meet)


@pytest.mark.parametrize("name", ["c8", "s3", "m5", "n5x", "lattice-p"])
def test_engines_agree_on_fixtures(name):
    alg = load(name)
    lat = enumerate_congruences(alg)
    a = commutator_table(alg, lat, method="translation")
    b = commutator_table(alg, lat, method="matrix")
    assert np.array_equal(a.table, b.table)


@settings(max_examples=40, deadline=None)
@given(algebras(max_n=3))
def test_engines_agree_on_random_algebras(alg):
    lat = enumerate_congruences(alg)
    a = commutator_table(alg, lat, method="translation")
    b = commutator_table(alg, lat, method="matrix")
    assert np.array_equal(a.table, b.table)
    # [α,β] ≤ α∧β and monotone hold for every algebra
    assert a.below_meet
    assert a.monotone


def test_unknown_method():
    alg = load("chain-2")
    lat = enumerate_congruences(alg)
    with pytest.raises(ValueError):
        tc_commutator(alg, lat, lat.elements[0], lat.elements[1], method="nope")


# classifications, frozen from the computed tables
CLASSIFY = {
    "c8": (False, 2, 2),
    "s3": (False, 2, None),
    "m5": (False, None, None),
    "n5x": (False, None, None),
    "u5": (False, None, None),
    "chain-3": (False, None, None),
}


@pytest.mark.parametrize("name", sorted(CLASSIFY))
def test_classify(name):
    c = classify(structure_of(load(name)))
    assert (c.abelian, c.solvable_n, c.nilpotent_n) == CLASSIFY[name]


def test_abelian_quotient():
    # C8/<-1> is the Klein four-group
    alg = load("c8")
    cs = structure_of(alg)
    q, _ = quotient_algebra(alg, cs.con.elements[cs.con.by_name("<-1>")])
    assert classify(structure_of(q)).abelian


def test_iterated_modes():
    cs = structure_of(load("c8"))
    top = cs.top
    assert cs.label(iterated(cs, top, top, 1)) == "<-1>"
    assert cs.label(iterated(cs, top, top, 2)) == "Δ"


LAWS = {
    "c8": {"commutative": True, "join_distributive": True, "equals_meet": False, "associative": True, "nabla_neutral": False},
    "n5x": {"commutative": True, "join_distributive": True, "equals_meet": False, "associative": True, "nabla_neutral": False},
    "u5": {"commutative": True, "join_distributive": False, "equals_meet": False, "associative": False, "nabla_neutral": True},
    "lattice-p": {"commutative": True, "join_distributive": True, "equals_meet": True, "associative": True, "nabla_neutral": True},
}


@pytest.mark.parametrize("name", sorted(LAWS))
def test_law_flags(name):
    assert structure_of(load(name)).law_flags == LAWS[name]


def test_law_witness_names_a_failure():
    cs = load("u5")
    w = law_witness(cs, "join_distributive")
    assert w is not None
    with pytest.raises(ValueError):
        law_witness(cs, "nonsense")


@pytest.mark.parametrize("name", ["s3", "m5", "n5x", "lattice-e", "lattice-p", "chain-4", "u5"])
def test_law_checks_hold(name):
    rep = law_checks(structure_of(load(name)), max_n=3)
    assert rep.passed, rep.lines()


def test_join_power_inequalities_fail_on_c8():
    rep = law_checks(structure_of(load("c8")), max_n=3)
    failed = {c.name for c in rep.failures()}
    assert failed == {
        "[a∨b,a∨b]^(nk) ≤ [a,a]^k ∨ [b,b]^n",
        "[a∨b,a∨b]^(n²) ≤ [a,a]^n ∨ [b,b]^n",
        "[a1∨…∨ak, …]^(n^k) ≤ ∨ [ai,ai]^n, k ≤ 3",
    }


def test_subalgebra_i_of_c8():
    alg = load("c8")
    cs = structure_of(alg)
    assert subalgebra_check(alg, cs, [alg.index[x] for x in ("1", "-1", "i", "-i")]).passed


def test_products_of_chains():
    assert product_check(load("chain-2"), load("chain-3")).passed


def test_product_l4_l4():
    l4 = load("chain-4")
    lat = enumerate_congruences(l4)
    quads = [(i, j, k, l) for i in range(0, len(lat), 3) for j in range(0, len(lat), 3)
             for k in range(0, len(lat), 2) for l in range(0, len(lat), 2)]
    assert product_check(l4, l4, quads).passed


@pytest.mark.parametrize("i", range(6))
def test_quotients_of_c8(i):
    alg = load("c8")
    theta = structure_of(alg).con.elements[i]
    assert commutator_quotient_check(alg, theta).passed


def test_structure_validation():
    with pytest.raises(ValueError):
        CommutatorStructure(chain(2), np.zeros((3, 3)), provenance="test")
    with pytest.raises(ValueError):
        CommutatorStructure(chain(2), np.full((2, 2), 5), provenance="test")


def test_product_needs_one_signature():
    with pytest.raises(SignatureError):
        direct_product(load("chain-2"), load("s3"))
    cs = structure_of(direct_product(load("chain-2"), load("chain-3")))
    assert cs.size == 2 * 4
    assert cs.law_flags["equals_meet"]


def test_c8_coatoms_commute_to_their_meet():
    cs = structure_of(load("c8"))
    coatoms = cs.lattice.lower_covers(cs.top)
    for a in coatoms:
        for b in coatoms:
            if a != b:
                assert cs.lattice.join[a, b] == cs.top
                assert cs.comm(a, b) == cs.lattice.meet[a, b]
