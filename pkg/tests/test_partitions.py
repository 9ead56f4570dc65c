from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partlogic import (
    FiniteUniverse,
    NumericalAttribute,
    all_partitions,
    discrete,
    dit_count,
    dit_set,
    event_probability,
    from_attribute,
    indiscrete,
    indit_set,
    is_complete,
    join,
    make_partition,
    refines,
)
from partlogic.errors import (
    EmptyBlock,
    EmptyList,
    EmptySet,
    IncompleteCover,
    IndexOutOfRange,
    InvalidUniverse,
    OverlappingBlocks,
    UniverseMismatch,
    UniverseTooLarge,
)
from partlogic.partitions import block_index_attribute, exact_event_probability
from partlogic.policy import NumericPolicy

from conftest import partitions_of, universes


def test_universe_validation():
    with pytest.raises(InvalidUniverse):
        FiniteUniverse([])
    with pytest.raises(InvalidUniverse):
        FiniteUniverse(["a", "a"])
    with pytest.raises(InvalidUniverse):
        FiniteUniverse(["a", "b"], [0.5, 0.6])
    with pytest.raises(InvalidUniverse):
        FiniteUniverse(["a", "b"], [1.5, -0.5])
    u = FiniteUniverse(["a", "b", "c"])
    assert u.probabilities == (Fraction(1, 3),) * 3
    assert u.exact and u.is_equiprobable


def test_make_partition_examples(u4):
    p = make_partition(u4, [{0, 1}, {2, 3}])
    assert p.m == 2
    u3 = FiniteUniverse(["a", "b", "c"])
    assert make_partition(u3, [{0}, {1}, {2}]) == discrete(u3)
    with pytest.raises(OverlappingBlocks):
        make_partition(u3, [{0, 1}, {1, 2}])


def test_make_partition_errors(u4):
    with pytest.raises(EmptyBlock):
        make_partition(u4, [{0, 1, 2, 3}, set()])
    with pytest.raises(IncompleteCover):
        make_partition(u4, [{0, 1}, {2}])
    with pytest.raises(IndexOutOfRange):
        make_partition(u4, [{0, 1, 2, 3, 4}])


def test_block_order_preserved_but_equality_canonical(u4):
    p = make_partition(u4, [{2, 3}, {0, 1}])
    q = make_partition(u4, [{0, 1}, {2, 3}])
    assert p.blocks == ((2, 3), (0, 1))
    assert p == q and hash(p) == hash(q)


def test_extreme_partitions():
    u3 = FiniteUniverse.equiprobable(3)
    assert indiscrete(u3).m == 1 and indiscrete(u3).blocks[0] == (0, 1, 2)
    assert discrete(u3).m == 3
    u1 = FiniteUniverse.equiprobable(1)
    assert indiscrete(u1) == discrete(u1)


def test_from_attribute():
    u = FiniteUniverse(["a", "b", "c"])
    assert from_attribute(NumericalAttribute(u, (1, 1, 2))).blocks == ((0, 1), (2,))
    assert from_attribute(NumericalAttribute(u, (5, 5, 5))) == indiscrete(u)
    assert from_attribute(NumericalAttribute(u, (3, 1, 2))) == discrete(u)


def test_from_attribute_blocks_by_ascending_value():
    u = FiniteUniverse(["a", "b", "c", "d"])
    assert from_attribute(NumericalAttribute(u, (9, 2, 9, -1))).blocks == ((3,), (1,), (0, 2))


def test_from_attribute_float_tolerance():
    u = FiniteUniverse(["a", "b", "c"])
    attr = NumericalAttribute(u, (0.1 + 0.2, 0.3, 0.5))
    assert from_attribute(attr).blocks == ((0, 1), (2,))
    # exact numerals are never merged
    exact = NumericalAttribute(u, (Fraction(1, 10**12), 0, 1))
    assert from_attribute(exact).m == 3
    strict = NumericPolicy(value_tol=0.0)
    assert from_attribute(attr, strict).m == 3


def test_dit_count_by_enumeration(u4):
    pi = make_partition(u4, [{0, 1}, {2, 3}])
    block = {0: 0, 1: 0, 2: 1, 3: 1}
    brute = sum(1 for i, k in product(range(4), repeat=2) if block[i] != block[k])
    assert brute == 8
    assert len(dit_set(pi)) == 8 == dit_count(pi)
    assert len(dit_set(indiscrete(u4))) == 0
    u3 = FiniteUniverse.equiprobable(3)
    assert len(dit_set(discrete(u3))) == 6


def test_pair_enumeration_cap():
    big = FiniteUniverse.equiprobable(65)
    with pytest.raises(UniverseTooLarge):
        dit_set(discrete(big))
    assert dit_count(discrete(big)) == 65 * 64


def test_join_examples(u4):
    pi = make_partition(u4, [{0, 1}, {2, 3}])
    sigma = make_partition(u4, [{0, 2}, {1, 3}])
    # intersect all block pairs by hand: {a,b}∩{a,c}={a}, {a,b}∩{b,d}={b}, ...
    expected = make_partition(u4, [{0}, {1}, {2}, {3}])
    assert join(pi, sigma) == expected == discrete(u4)
    assert join(pi, pi) == pi
    assert join(pi, indiscrete(u4)) == pi


def test_join_universe_mismatch(u4):
    other = FiniteUniverse(["w", "x", "y", "z"])
    with pytest.raises(UniverseMismatch):
        join(discrete(u4), discrete(other))


def test_is_complete(u4):
    pi = make_partition(u4, [{0, 1}, {2, 3}])
    sigma = make_partition(u4, [{0, 2}, {1, 3}])
    assert is_complete([pi, sigma])
    assert not is_complete([indiscrete(u4)])
    assert is_complete([discrete(u4)])
    with pytest.raises(EmptyList):
        is_complete([])


def test_event_probability(u4, u3_skewed):
    assert event_probability(u4, {0, 1}) == 0.5
    assert event_probability(u4, range(4)) == 1.0
    assert exact_event_probability(u3_skewed, {0, 1}) == Fraction(3, 4)
    assert event_probability(u3_skewed, {0, 1}) == 0.75
    with pytest.raises(EmptySet):
        event_probability(u4, set())
    with pytest.raises(IndexOutOfRange):
        event_probability(u4, {7})


@pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)])
def test_all_partitions_counts(n, bell):
    parts = list(all_partitions(FiniteUniverse.equiprobable(n)))
    assert len(parts) == bell
    assert len(set(parts)) == bell


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_indit_is_equivalence_and_complement_of_dit(data):
    u = data.draw(universes(max_n=8))
    pi = data.draw(partitions_of(u))
    indit, dit = indit_set(pi), dit_set(pi)
    assert indit.is_equivalence()
    everything = {(i, k) for i in range(u.n) for k in range(u.n)}
    assert dit.pairs == everything - indit.pairs
    assert not dit.pairs & indit.pairs


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_join_unions_dits(data):
    u = data.draw(universes(max_n=8))
    pi, sigma = data.draw(partitions_of(u)), data.draw(partitions_of(u))
    assert dit_set(join(pi, sigma)).pairs == dit_set(pi).pairs | dit_set(sigma).pairs
    assert refines(join(pi, sigma), pi) and refines(join(pi, sigma), sigma)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_refinement_monotone_on_dits(data):
    u = data.draw(universes(max_n=8))
    pi = data.draw(partitions_of(u))
    sigma = join(pi, data.draw(partitions_of(u)))  # refines pi
    assert refines(sigma, pi)
    assert dit_set(pi).pairs <= dit_set(sigma).pairs


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_from_attribute_inverts_block_labeling(data):
    u = data.draw(universes(max_n=8))
    pi = data.draw(partitions_of(u))
    assert from_attribute(block_index_attribute(pi)) == pi
