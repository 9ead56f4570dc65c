"""Subsets of a finite universe treated as vectors over Z₂ⁿ.

Brackets are overlap cardinalities: ‖S‖ = √|S|, ‖S∩T‖ = √|S∩T|, and the
classical Born rule for drawing u_i from S is |{u_i}∩S| / |S|.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import EmptySet, UniverseMismatch
from .partitions import FiniteUniverse


@dataclass(frozen=True)
class SetKet:
    universe: FiniteUniverse
    support: frozenset[int]

    def __init__(self, universe: FiniteUniverse, support: Iterable[int]):
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "support", universe.check_indices(support))

    def __len__(self) -> int:
        return len(self.support)

    def indicator(self) -> tuple[int, ...]:
        return tuple(int(i in self.support) for i in range(self.universe.n))


def _same(s: SetKet, t: SetKet) -> None:
    if s.universe != t.universe:
        raise UniverseMismatch("set kets live on different universes")


def set_norm(s: SetKet) -> float:
    return math.sqrt(len(s.support))


def overlap(s: SetKet, t: SetKet) -> float:
    _same(s, t)
    return math.sqrt(len(s.support & t.support))


def overlap_count(s: SetKet, t: SetKet) -> int:
    _same(s, t)
    return len(s.support & t.support)


def set_born(i: int, s: SetKet) -> float:
    if not s.support:
        raise EmptySet("Born rule needs a non-empty set")
    s.universe.check_indices([i])
    return 1.0 / len(s.support) if i in s.support else 0.0


def set_born_distribution(s: SetKet) -> list[float]:
    return [set_born(i, s) for i in range(s.universe.n)]


def z2_add(s: SetKet, t: SetKet) -> SetKet:
    """Indicator-vector addition mod 2, i.e. symmetric difference."""
    _same(s, t)
    return SetKet(s.universe, s.support ^ t.support)


def always_distinguishable(s: SetKet, t: SetKet) -> bool:
    """Whether every pair of draws (x from S, y from T) gives distinct elements."""
    _same(s, t)
    return all(x != y for x in s.support for y in t.support)
