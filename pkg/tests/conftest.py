import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from partlogic import FiniteUniverse, Partition


@pytest.fixture
def u4():
    return FiniteUniverse(["a", "b", "c", "d"])


@pytest.fixture
def u3_skewed():
    return FiniteUniverse(["u1", "u2", "u3"], [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)])


def partition_from_labels(universe, labels):
    blocks = {}
    for i, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(i)
    return Partition(universe, tuple(tuple(b) for b in blocks.values()))


@st.composite
def universes(draw, min_n=1, max_n=8, equiprobable=False):
    n = draw(st.integers(min_n, max_n))
    if equiprobable:
        return FiniteUniverse.equiprobable(n)
    weights = draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n))
    total = sum(weights)
    return FiniteUniverse([f"u{i + 1}" for i in range(n)], [w / total for w in weights])


@st.composite
def partitions_of(draw, universe):
    labels = draw(st.lists(st.integers(0, universe.n - 1), min_size=universe.n, max_size=universe.n))
    return partition_from_labels(universe, labels)


@st.composite
def subsets_of(draw, universe):
    return sorted(draw(st.sets(st.integers(0, universe.n - 1), min_size=1)))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
