import pytest

from retic.algebra import SurjectiveMorphism, direct_product, identity_morphism, quotient_algebra
from retic.analysis import structure_of
from retic.errors import SignatureError
from retic.functor import (
    hyperarchimedean_conditions,
    phi_f,
    reticulate_algebra,
    retic_morphism,
    skew_congruences,
    transport_checks,
    verify_functoriality,
    verify_hyperarchimedean_equivalences,
    verify_product_preservation,
    verify_quotient_preservation,
    verify_semiprime_reduction,
)
from retic.io import load

QUOTIENT_FIXTURES = ["n5x", "lattice-p", "lattice-e", "chain-4", "c8", "m5"]


@pytest.mark.parametrize("name", QUOTIENT_FIXTURES)
def test_quotients_and_transport(name):
    alg = load(name)
    for theta in structure_of(alg).con.elements:
        assert verify_quotient_preservation(alg, theta).passed
        assert transport_checks(alg, theta).passed


@pytest.mark.parametrize("name", ["n5x", "lattice-p", "chain-3"])
def test_functoriality_along_chains(name):
    alg = load(name)
    con = structure_of(alg).con
    for a in con.elements:
        for b in con.elements:
            if a.leq(b):
                assert verify_functoriality(alg, a, b).passed


def test_functoriality_needs_order():
    alg = load("lattice-p")
    con = structure_of(alg).con
    with pytest.raises(ValueError):
        verify_functoriality(alg, con.elements[con.top], con.elements[con.bottom])


def test_identity_induces_identity():
    alg = load("n5x")
    r = reticulate_algebra(alg)
    m = retic_morphism(identity_morphism(alg), r, r)
    assert m.map == tuple(range(r.size))
    assert m.kernel.members == frozenset({r.lattice.bottom})


def test_phi_f_on_quotient():
    alg = load("n5x")
    ra = reticulate_algebra(alg)
    con = ra.source.con
    theta = con.elements[con.by_name("phi")]
    q, p = quotient_algebra(alg, theta)
    rb = reticulate_algebra(q)
    # φ_f(Δ) = Ker p, the bottom of Con(A/θ)
    assert phi_f(p, ra, rb, con.bottom) == rb.source.bottom
    assert phi_f(p, ra, rb, con.top) == rb.source.top


def test_morphisms_must_be_surjective():
    alg = load("chain-3")
    with pytest.raises(ValueError):
        SurjectiveMorphism(alg, alg, (0, 0, 0))


def test_products():
    rep = verify_product_preservation(load("chain-2"), load("chain-3"))
    assert rep.passed, rep.lines()
    assert skew_congruences(load("lattice-e"), load("lattice-p")) == []
    with pytest.raises(SignatureError):
        verify_product_preservation(load("chain-2"), load("c8"))


def test_groups_have_skew_congruences():
    # the diagonal of C8×C8 is a normal subgroup that is not a product
    c8 = load("c8")
    assert skew_congruences(c8, c8, direct_product(c8, c8))


@pytest.mark.parametrize("name", ["n5x", "m5", "lattice-p", "chain-4", "c8"])
def test_semiprime_reduction_battery(name):
    assert verify_semiprime_reduction(load(name)).passed


def test_boolean_center_comparison_on_n():
    # outside a semi-degenerate variety the two Boolean centers differ in size
    rep = verify_semiprime_reduction(load("n5x"))
    check = next(c for c in rep.checks if c.name.startswith("B(L(A))"))
    assert not check.passed and check.conditional


# the six conditions on the lattice fixtures, frozen from the computation
HYP = {"chain-4": True, "chain-3": True, "lattice-d": True, "lattice-p": False, "lattice-e": False}


@pytest.mark.parametrize("name", sorted(HYP))
def test_hyperarchimedean_conditions_agree(name):
    conds = hyperarchimedean_conditions(load(name))
    assert set(conds.values()) == {HYP[name]}
    assert verify_hyperarchimedean_equivalences(load(name)).passed


def test_hyperarchimedean_conditions_split_on_groups():
    conds = hyperarchimedean_conditions(load("c8"))
    assert conds["A hyperarchimedean"] and not conds["Max(A) = Spec(A)"]
    rep = verify_hyperarchimedean_equivalences(load("c8"))
    assert rep.passed and all(c.conditional for c in rep.checks)
