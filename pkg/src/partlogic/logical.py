"""Incidence matrices, classical density matrices, logical entropy and the
classical Lüders mixture."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

from .density import DensityMatrix, logical_entropy, luders_mask, luders_sum, zeroed_sum
from .errors import DimensionMismatch, EmptySet, PartitionLogicError, ZeroProbabilityEvent
from .partitions import (
    FiniteUniverse,
    PairRelation,
    Partition,
    dit_count,
    exact_event_probability,
)
from .policy import DEFAULT_POLICY, NumericPolicy


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)


def incidence_matrix(rel: PairRelation) -> IncidenceMatrix:
    n = rel.universe.n
    m = np.zeros((n, n), dtype=np.int8)
    for i, j in rel.pairs:
        m[i, j] = 1
    m.setflags(write=False)
    return IncidenceMatrix(m)


def diagonal_relation(universe: FiniteUniverse, subset: Iterable[int]) -> PairRelation:
    """ΔS = {(u, u) : u ∈ S}."""
    s = universe.check_indices(subset)
    return PairRelation(universe, frozenset((i, i) for i in s))


def square_relation(universe: FiniteUniverse, subset: Iterable[int]) -> PairRelation:
    """S × S."""
    s = universe.check_indices(subset)
    return PairRelation(universe, frozenset((i, k) for i in s for k in s))


def _support(universe: FiniteUniverse, subset: Iterable[int]) -> list[int]:
    s = sorted(universe.check_indices(subset))
    if not s:
        raise EmptySet("subset must be non-empty")
    return s


def coherence_amplitudes(
    universe: FiniteUniverse, subset: Iterable[int], conditional: bool = True
) -> np.ndarray:
    """Matrix of √(p_i p_j) over S × S, zero elsewhere.

    With ``conditional=True`` the entries are divided by Pr(S), giving the
    entries of ρ(S). With ``conditional=False`` they are the raw two-draw
    amplitudes √(p_i p_j), whose squares are the joint probabilities p_i p_j.
    """
    s = _support(universe, subset)
    probs = universe.probabilities
    pr = exact_event_probability(universe, s) if conditional else 1
    if pr <= 0:
        raise ZeroProbabilityEvent(f"Pr(S) = 0 for S = {s}")
    out = np.zeros((universe.n, universe.n))
    for i in s:
        for j in s:
            # diagonal stays exact (p_i / Pr(S)) when the probabilities are rational
            out[i, j] = float(probs[i] / pr) if i == j else math.sqrt(float(probs[i] * probs[j])) / float(pr)
    return out


def density_of_subset(
    universe: FiniteUniverse, subset: Iterable[int], policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    """ρ(S) = |S⟩⟨S| with entries √(p_i p_j)/Pr(S) on S × S."""
    return DensityMatrix(coherence_amplitudes(universe, subset), universe.labels, policy)


def density_of_partition(partition: Partition, policy: NumericPolicy = DEFAULT_POLICY) -> DensityMatrix:
    """ρ(π) = Σ_j Pr(B_j) ρ(B_j), skipping zero-probability blocks."""
    u = partition.universe
    out = np.zeros((u.n, u.n))
    for block, pr in zip(partition.blocks, partition.block_probabilities()):
        if pr > 0:
            out += float(pr) * coherence_amplitudes(u, block)
    return DensityMatrix(out, u.labels, policy)


def logical_entropy_partition(partition: Partition, exact: bool = False) -> Real:
    """h(π) = 1 − Σ Pr(B_j)².

    Computed in exact rational arithmetic whenever the universe carries exact
    probabilities; ``exact=True`` returns that Fraction instead of a float.
    """
    probs = partition.block_probabilities()
    h = 1 - sum(pr * pr for pr in probs)
    if exact:
        if not partition.universe.exact:
            raise PartitionLogicError("exact entropy needs exact (rational) point probabilities")
        return Fraction(h)
    return float(h)


def dit_fraction(partition: Partition) -> Fraction:
    """|dit(π)| / n², the two-draw distinction probability for equiprobable points."""
    n = partition.universe.n
    return Fraction(dit_count(partition), n * n)


def logical_entropy_density(rho: DensityMatrix) -> float:
    return logical_entropy(rho)


def shannon_entropy_partition(partition: Partition) -> float:
    """−Σ Pr(B_j) log₂ Pr(B_j) in bits."""
    return -sum(float(pr) * math.log2(float(pr)) for pr in partition.block_probabilities() if pr > 0)


def entropy_report(partition: Partition) -> dict:
    return {
        "logical": logical_entropy_partition(partition),
        "shannon": shannon_entropy_partition(partition),
    }


def classical_luders(
    rho: DensityMatrix, partition: Partition, policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    """ρ̂ = Σ_j P_{B_j} ρ P_{B_j} with diagonal 0/1 projectors."""
    if rho.dim != partition.universe.n:
        raise DimensionMismatch(
            f"density has dimension {rho.dim}, partition universe has {partition.universe.n}"
        )
    return DensityMatrix(luders_sum(rho.entries, partition.blocks), rho.basis_labels, policy)


def classical_luders_fast(
    rho: DensityMatrix, partition: Partition, policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    """Index-mask version of :func:`classical_luders`; entrywise identical."""
    if rho.dim != partition.universe.n:
        raise DimensionMismatch(
            f"density has dimension {rho.dim}, partition universe has {partition.universe.n}"
        )
    return DensityMatrix(luders_mask(rho.entries, partition.block_index()), rho.basis_labels, policy)


def zeroed_amplitude_sum(
    rho: DensityMatrix, rho_hat: DensityMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> float:
    """Sum of |ρ_ij|² over the indistinction amplitudes zeroed in ``rho_hat``.

    For pure ρ(S) this equals h(ρ̂); raises NotAConformalPair if ``rho_hat``
    is not an entrywise zeroing of ``rho``.
    """
    return zeroed_sum(rho, rho_hat, policy)
