import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import set_partitions
from retic.partition import Congruence, join_all
from strategies import partitions


def test_least_representative_form():
    c = Congruence.from_blocks(5, [[3, 1], [4, 2]])
    assert c.rep == (0, 1, 2, 1, 2)
    assert c.blocks() == [[0], [1, 3], [2, 4]]
    assert c.num_blocks == 3


def test_rejects_non_canonical_rep():
    with pytest.raises(ValueError):
        Congruence((1, 1))
    with pytest.raises(ValueError):
        Congruence.from_blocks(3, [[0, 1], [1, 2]])


def test_bounds():
    assert Congruence.identity(4).is_identity()
    assert Congruence.full(4).is_full()
    assert Congruence.identity(4).leq(Congruence.full(4))


def test_partition_counts_are_bell_numbers():
    assert [len(set_partitions(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def _brute_join(a, b):
    above = [p for p in set_partitions(a.n) if a.leq(p) and b.leq(p)]
    return max(above, key=lambda p: p.num_blocks)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(partitions(n), partitions(n))))
def test_meet_and_join_match_brute_force(pair):
    a, b = pair
    meet = a.meet(b)
    assert all(meet.related(x, y) == (a.related(x, y) and b.related(x, y))
               for x in range(a.n) for y in range(a.n))
    assert a.join(b) == _brute_join(a, b)
    assert join_all([a, b], a.n) == a.join(b)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(partitions(n), partitions(n))))
def test_order_is_refinement(pair):
    a, b = pair
    assert a.leq(b) == all(b.related(x, y) for x in range(a.n) for y in range(a.n) if a.related(x, y))


def test_format_uses_labels():
    c = Congruence.from_blocks(3, [[0, 2]])
    assert c.format(["a", "b", "c"]) == "a c|b"
