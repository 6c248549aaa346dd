from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_prime_commutator
from retic.analysis import structure_of
from retic.errors import HypothesisError
from retic.io import FIXTURES, load
from retic.lattice import chain, product
from retic.reticulation import lattice_algebra
from retic.spectrum import (
    boolean_center,
    boolean_center_report,
    hyperarchimedean_witnesses,
    is_prime,
    is_semiprime_algebra,
    max_in_spec,
    maximal,
    radical,
    radical_map,
    spectrum,
    spectrum_checks,
    spectrum_report,
    stone_sets,
)
from strategies import algebras

DATA = Path(__file__).parent / "data"

# Spec and Max by label, frozen after checking against the definitional oracle
SPEC = {
    "c8": (set(), {"<i>", "<j>", "<k>"}),
    "s3": (set(), {"A3"}),
    "n5x": ({"xi", "psi"}, {"chi", "a b c x|y", "a b c y|x"}),
    "u5": (set(), {"α", "β", "γ"}),
    "lattice-e": ({"Δ", "mu"}, {"mu"}),
    "lattice-p": ({"Δ", "alpha", "beta"}, {"alpha", "beta"}),
    "lattice-d": ({"Δ"}, {"Δ"}),
    "chain-4": ({"0 x y|1", "0 x|y 1", "0|x y 1"}, {"0 x y|1", "0 x|y 1", "0|x y 1"}),
}


def _oracle_spec(cs):
    t = cs.table.tolist()
    leq = cs.lattice.leq.tolist()
    return [p for p in range(cs.size) if brute_prime_commutator(t, leq, p)]


@pytest.mark.parametrize("name", FIXTURES)
def test_spec_matches_definition(name):
    cs = structure_of(load(name))
    assert spectrum(cs) == _oracle_spec(cs)


@pytest.mark.parametrize("name", sorted(SPEC))
def test_spec_and_max(name):
    cs = structure_of(load(name))
    spec, mx = SPEC[name]
    assert {cs.label(i) for i in spectrum(cs)} == spec
    assert {cs.label(i) for i in maximal(cs)} == mx


def test_m_spectrum():
    cs = structure_of(load("m5"))
    assert [cs.label(i) for i in spectrum(cs)] == ["a|b|x y z"]
    assert len(maximal(cs)) == 7
    assert cs.label(radical(cs, cs.bottom)) == "a|b|x y z"


@settings(max_examples=40, deadline=None)
@given(algebras(max_n=3))
def test_random_spec_matches_definition(alg):
    cs = structure_of(alg)
    assert [p for p in range(cs.size) if is_prime(cs, p)] == _oracle_spec(cs)


@st.composite
def chain_products(draw):
    a, b = draw(st.integers(1, 3)), draw(st.integers(1, 3))
    return lattice_algebra(product(chain(a), chain(b)), name="grid")


@settings(max_examples=12, deadline=None)
@given(chain_products())
def test_lattice_algebras_are_semiprime(alg):
    # the commutator is the meet, so every congruence is its own radical
    cs = structure_of(alg)
    assert radical_map(cs) == list(range(cs.size))
    assert radical_map(cs, "via_iteration") == list(range(cs.size))
    assert is_semiprime_algebra(cs)
    assert spectrum(cs) == [p for p in range(cs.size) if p != cs.top and cs.lattice.meet_irreducible(p)]


def test_radical_of_n():
    cs = structure_of(load("n5x"))
    lab = {cs.label(i): i for i in range(cs.size)}
    assert cs.label(radical(cs, lab["Δ"])) == "phi"
    assert cs.label(radical(cs, lab["xi1"], "via_iteration")) == "xi"


def test_empty_spectrum_sends_everything_to_top():
    cs = load("u5")
    assert radical_map(cs) == [cs.top] * cs.size


def test_iteration_needs_principal_marks():
    cs = load("u5")
    with pytest.raises(HypothesisError):
        radical(cs, cs.bottom, "via_iteration")
    with pytest.raises(HypothesisError):
        hyperarchimedean_witnesses(cs)
    with pytest.raises(ValueError):
        radical(cs, cs.bottom, "sideways")


def test_stone_sets_partition_spec():
    cs = structure_of(load("lattice-p"))
    for t in range(cs.size):
        v, d = stone_sets(cs, t)
        assert v | d == set(spectrum(cs)) and not v & d
        assert v == {p for p in spectrum(cs) if cs.leq(t, p)}


def test_boolean_center_of_chain_4():
    cs = structure_of(load("chain-4"))
    assert len(boolean_center(cs)) == cs.size
    assert boolean_center_report(cs).passed


def test_boolean_center_of_u():
    # [θ,∇] = θ holds on U even though the commutator is not join-distributive
    cs = load("u5")
    assert boolean_center_report(cs).passed
    assert len(boolean_center(cs)) == 2


@pytest.mark.parametrize("name", FIXTURES)
def test_spectrum_checks(name):
    rep = spectrum_checks(structure_of(load(name)))
    assert rep.passed, rep.lines()


def test_max_in_spec():
    assert max_in_spec(structure_of(load("lattice-p")))
    assert not max_in_spec(structure_of(load("n5x")))


def test_hyperarchimedean():
    assert all(v is not None for v in hyperarchimedean_witnesses(structure_of(load("chain-4"))).values())
    assert spectrum_report(structure_of(load("lattice-p"))).hyperarchimedean is False


def test_report_dict():
    cs = structure_of(load("n5x"))
    d = spectrum_report(cs).to_dict(cs)
    assert sorted(d["spec"]) == ["psi", "xi"]
    assert d["radical"]["Δ"] == "phi"
    assert d["semiprime_algebra"] is False


def test_noncommutative_structure_has_a_prime():
    cs = load(str(DATA / "lopsided.alg"))
    assert [cs.label(p) for p in spectrum(cs)] == ["a"]


def test_boolean_center_of_c8():
    cs = structure_of(load("c8"))
    assert [cs.label(i) for i in boolean_center(cs)] == ["Δ", "∇"]
