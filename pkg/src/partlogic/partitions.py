"""Finite universes, set partitions, dit/indit relations and the join."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

from .errors import (
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
from .policy import DEFAULT_POLICY, NumericPolicy


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class FiniteUniverse:
    """Labeled finite sample space with point probabilities.

    ``probabilities`` keeps the numbers exactly as given. When omitted, every
    point gets the exact value ``Fraction(1, n)``.
    """

    labels: tuple[str, ...]
    probabilities: tuple[Real, ...]

    def __init__(self, labels: Iterable[str], probabilities: Iterable[Real] | None = None):
        labels = tuple(str(label) for label in labels)
        n = len(labels)
        if n < 1:
            raise InvalidUniverse("a universe needs at least one element")
        if len(set(labels)) != n:
            raise InvalidUniverse(f"labels must be distinct: {labels}")
        if probabilities is None:
            probs: tuple[Real, ...] = (Fraction(1, n),) * n
        else:
            probs = tuple(probabilities)
            if len(probs) != n:
                raise InvalidUniverse(f"expected {n} probabilities, got {len(probs)}")
            for p in probs:
                if isinstance(p, bool) or not isinstance(p, Real):
                    raise InvalidUniverse(f"probability {p!r} is not a real number")
                if not np.isfinite(float(p)) or p < 0:
                    raise InvalidUniverse(f"probability {p!r} is negative or not finite")
            total = sum(probs)
            if all(_is_exact(p) for p in probs):
                if total != 1:
                    raise InvalidUniverse(f"probabilities sum to {total}, not 1")
            elif abs(float(total) - 1.0) > DEFAULT_POLICY.probability_tol:
                raise InvalidUniverse(f"probabilities sum to {float(total)!r}, not 1")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def equiprobable(cls, n: int, prefix: str = "u") -> FiniteUniverse:
        return cls([f"{prefix}{i + 1}" for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def exact(self) -> bool:
        return all(_is_exact(p) for p in self.probabilities)

    @property
    def is_equiprobable(self) -> bool:
        first = self.probabilities[0]
        return all(p == first for p in self.probabilities)

    def p(self) -> np.ndarray:
        return np.array([float(p) for p in self.probabilities])

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise IndexOutOfRange(f"no element labeled {label!r}") from None

    def check_indices(self, indices: Iterable[int]) -> frozenset[int]:
        out = frozenset(int(i) for i in indices)
        bad = [i for i in out if not 0 <= i < self.n]
        if bad:
            raise IndexOutOfRange(f"indices {sorted(bad)} outside 0..{self.n - 1}")
        return out


@dataclass(frozen=True)
class NumericalAttribute:
    universe: FiniteUniverse
    values: tuple[Real, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.universe.n:
            raise IndexOutOfRange(
                f"attribute has {len(self.values)} values for a universe of {self.universe.n}"
            )


@dataclass(frozen=True)
class PairRelation:
    """Binary relation on a universe, as a set of ordered index pairs."""

    universe: FiniteUniverse
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((int(i), int(j)) for i, j in self.pairs)
        n = self.universe.n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexOutOfRange(f"pair {(i, j)} outside 0..{n - 1}")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def is_reflexive(self) -> bool:
        return all((i, i) in self.pairs for i in range(self.universe.n))

    def is_symmetric(self) -> bool:
        return all((j, i) in self.pairs for i, j in self.pairs)

    def is_transitive(self) -> bool:
        succ: dict[int, set[int]] = {}
        for i, j in self.pairs:
            succ.setdefault(i, set()).add(j)
        return all(
            (i, k) in self.pairs for i, j in self.pairs for k in succ.get(j, ())
        )

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()


@dataclass(frozen=True, eq=False)
class Partition:
    """Blocks over a universe, in the order they were given.

    Equality and hashing use the canonical order (blocks sorted by their
    smallest member), so two partitions with the same blocks compare equal.
    """

    universe: FiniteUniverse
    blocks: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.blocks)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.blocks, key=lambda b: b[0]))

    def canonicalized(self) -> Partition:
        return Partition(self.universe, self.canonical())

    def block_index(self) -> np.ndarray:
        """Array mapping each element index to the number of its block."""
        out = np.empty(self.universe.n, dtype=int)
        for j, block in enumerate(self.blocks):
            out[list(block)] = j
        return out

    def block_probabilities(self) -> list[Real]:
        probs = self.universe.probabilities
        return [sum((probs[i] for i in block), start=0 * probs[0]) for block in self.blocks]

    def is_discrete(self) -> bool:
        return self.m == self.universe.n

    def is_indiscrete(self) -> bool:
        return self.m == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.universe == other.universe and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.universe, self.canonical()))

    def __repr__(self) -> str:
        labels = self.universe.labels
        body = ", ".join("{" + ",".join(labels[i] for i in b) + "}" for b in self.blocks)
        return f"Partition({{{body}}})"


def make_partition(universe: FiniteUniverse, blocks: Iterable[Iterable[int]]) -> Partition:
    seen: set[int] = set()
    out = []
    for block in blocks:
        members = sorted(universe.check_indices(block))
        if not members:
            raise EmptyBlock("partition blocks must be non-empty")
        overlap = seen.intersection(members)
        if overlap:
            raise OverlappingBlocks(f"indices {sorted(overlap)} appear in more than one block")
        seen.update(members)
        out.append(tuple(members))
    if len(seen) != universe.n:
        missing = sorted(set(range(universe.n)) - seen)
        raise IncompleteCover(f"indices {missing} are not covered by any block")
    return Partition(universe, tuple(out))


def indiscrete(universe: FiniteUniverse) -> Partition:
    return Partition(universe, (tuple(range(universe.n)),))


def discrete(universe: FiniteUniverse) -> Partition:
    return Partition(universe, tuple((i,) for i in range(universe.n)))


def group_values(values: Sequence[Real], tol: float = DEFAULT_POLICY.value_tol) -> list[tuple[Real, list[int]]]:
    """Group indices by value, ascending.

    Exact numerals (ints, Fractions) are grouped by equality. As soon as any
    value is a float, a group collects every value within ``tol`` of its
    smallest member.
    """
    order = sorted(range(len(values)), key=lambda i: values[i])
    exact = all(_is_exact(v) for v in values)
    groups: list[tuple[Real, list[int]]] = []
    for i in order:
        v = values[i]
        if groups:
            anchor = groups[-1][0]
            same = v == anchor if exact else abs(float(v) - float(anchor)) <= tol
            if same:
                groups[-1][1].append(i)
                continue
        groups.append((v, [i]))
    return groups


def from_attribute(attr: NumericalAttribute, policy: NumericPolicy = DEFAULT_POLICY) -> Partition:
    """Inverse-image partition of an attribute, blocks by ascending value."""
    groups = group_values(attr.values, policy.value_tol)
    return Partition(attr.universe, tuple(tuple(sorted(idx)) for _, idx in groups))


def block_index_attribute(partition: Partition) -> NumericalAttribute:
    return NumericalAttribute(partition.universe, tuple(int(j) for j in partition.block_index()))


def _check_pair_size(universe: FiniteUniverse, policy: NumericPolicy) -> None:
    if universe.n > policy.max_pair_universe:
        raise UniverseTooLarge(
            f"pair enumeration is capped at n={policy.max_pair_universe}, universe has {universe.n}"
        )


def indit_set(partition: Partition, policy: NumericPolicy = DEFAULT_POLICY) -> PairRelation:
    _check_pair_size(partition.universe, policy)
    pairs = frozenset((i, k) for block in partition.blocks for i in block for k in block)
    return PairRelation(partition.universe, pairs)


def dit_set(partition: Partition, policy: NumericPolicy = DEFAULT_POLICY) -> PairRelation:
    _check_pair_size(partition.universe, policy)
    owner = partition.block_index()
    n = partition.universe.n
    pairs = frozenset((i, k) for i in range(n) for k in range(n) if owner[i] != owner[k])
    return PairRelation(partition.universe, pairs)


def dit_count(partition: Partition) -> int:
    """|dit(π)| = n² − Σ|B_j|², without enumerating pairs."""
    return partition.universe.n ** 2 - sum(len(b) ** 2 for b in partition.blocks)


def _same_universe(parts: Sequence[Partition]) -> None:
    first = parts[0].universe
    for p in parts[1:]:
        if p.universe != first:
            raise UniverseMismatch("partitions live on different universes")


def join(pi: Partition, sigma: Partition) -> Partition:
    """Coarsest common refinement: all non-empty block intersections."""
    _same_universe([pi, sigma])
    blocks = []
    for b in pi.blocks:
        bs = set(b)
        for c in sigma.blocks:
            common = bs.intersection(c)
            if common:
                blocks.append(tuple(sorted(common)))
    blocks.sort(key=lambda b: b[0])
    return Partition(pi.universe, tuple(blocks))


def join_all(parts: Sequence[Partition]) -> Partition:
    if not parts:
        raise EmptyList("need at least one partition")
    _same_universe(parts)
    out = parts[0]
    for p in parts[1:]:
        out = join(out, p)
    return out


def is_complete(parts: Sequence[Partition]) -> bool:
    return join_all(parts).is_discrete()


def refines(sigma: Partition, pi: Partition) -> bool:
    """True when every block of ``sigma`` sits inside some block of ``pi``."""
    _same_universe([pi, sigma])
    owner = pi.block_index()
    return all(len({owner[i] for i in block}) == 1 for block in sigma.blocks)


def event_probability(universe: FiniteUniverse, subset: Iterable[int]) -> float:
    return float(exact_event_probability(universe, subset))


def exact_event_probability(universe: FiniteUniverse, subset: Iterable[int]) -> Real:
    """Σ_{i∈S} p_i, kept exact when the universe's probabilities are exact."""
    s = universe.check_indices(subset)
    if not s:
        raise EmptySet("event must be a non-empty subset")
    probs = universe.probabilities
    return sum((probs[i] for i in sorted(s)), start=0 * probs[0])


def all_partitions(universe: FiniteUniverse) -> Iterator[Partition]:
    """Every partition of the universe (Bell-number many), canonical order."""

    def grow(i: int, blocks: list[list[int]]):
        if i == universe.n:
            yield Partition(universe, tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            yield from grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from grow(i + 1, blocks)
        blocks.pop()

    yield from grow(0, [])
