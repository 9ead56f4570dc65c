"""Random-instance checks of the two zeroed-amplitude theorems.

Every instance is drawn from a :class:`SplitMix64` stream, so a (seed,
trials, max_dim) triple fully determines the run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .logical import classical_luders, density_of_subset, logical_entropy_density, zeroed_amplitude_sum
from .partitions import FiniteUniverse, Partition
from .policy import DEFAULT_POLICY, NumericPolicy
from .quantum import (
    Observable,
    StateVector,
    decohered_coherence_sum,
    density_of_state,
    quantum_logical_entropy,
    quantum_luders,
    two_measurement_difference,
)
from .rng import SplitMix64


def random_universe(rng: SplitMix64, n: int) -> FiniteUniverse:
    weights = [rng.uniform(0.05, 1.0) for _ in range(n)]
    total = sum(weights)
    return FiniteUniverse([f"u{i + 1}" for i in range(n)], [w / total for w in weights])


def random_subset(rng: SplitMix64, n: int) -> list[int]:
    while True:
        s = [i for i in range(n) if rng.random() < 0.5]
        if s:
            return s


def random_labels(rng: SplitMix64, n: int) -> list[int]:
    """A random function from n points onto at most n labels."""
    k = rng.randint(1, n)
    return [rng.randint(0, k - 1) for _ in range(n)]


def random_partition(rng: SplitMix64, universe: FiniteUniverse) -> Partition:
    labels = random_labels(rng, universe.n)
    blocks: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(i)
    return Partition(universe, tuple(sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])))


def random_state(rng: SplitMix64, dim: int) -> StateVector:
    a = np.array([complex(rng.normal(), rng.normal()) for _ in range(dim)])
    return StateVector(a / np.linalg.norm(a))


def random_observable(rng: SplitMix64, dim: int) -> Observable:
    return Observable.from_values(random_labels(rng, dim))


@dataclass
class VerificationResult:
    theorem: str
    trials: int
    seed: int
    max_dim: int
    tolerance: float
    max_residual: float
    max_secondary_residual: float
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "seed": self.seed,
            "max_dim": self.max_dim,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "max_secondary_residual": self.max_secondary_residual,
            "failures": self.failures,
            "passed": self.passed,
        }


def theorem1_instance(rng: SplitMix64, max_dim: int, policy: NumericPolicy = DEFAULT_POLICY):
    """Draw (universe, S, π); return (zeroed sum, h(ρ̂))."""
    n = rng.randint(2, max_dim)
    u = random_universe(rng, n)
    s = random_subset(rng, n)
    pi = random_partition(rng, u)
    rho = density_of_subset(u, s, policy)
    rho_hat = classical_luders(rho, pi, policy)
    return zeroed_amplitude_sum(rho, rho_hat, policy), logical_entropy_density(rho_hat)


def theorem2_instance(rng: SplitMix64, max_dim: int, policy: NumericPolicy = DEFAULT_POLICY):
    """Draw (ψ, F); return (decohered sum, h(ρ̂), two-measurement difference probability)."""
    dim = rng.randint(2, max_dim)
    psi = random_state(rng, dim)
    obs = random_observable(rng, dim)
    rho = density_of_state(psi, policy)
    rho_hat = quantum_luders(rho, obs, policy)
    return (
        decohered_coherence_sum(rho, rho_hat, policy),
        quantum_logical_entropy(rho_hat),
        two_measurement_difference(psi, obs, policy),
    )


def verify_theorem1(
    trials: int = 1000, seed: int = 0, max_dim: int = 8, policy: NumericPolicy = DEFAULT_POLICY
) -> VerificationResult:
    rng = SplitMix64(seed)
    worst, failures = 0.0, 0
    for _ in range(trials):
        zeroed, h = theorem1_instance(rng, max_dim, policy)
        r = abs(zeroed - h)
        worst = max(worst, r)
        failures += r >= policy.entry_tol
    return VerificationResult("theorem1", trials, seed, max_dim, policy.entry_tol, worst, 0.0, failures)


def verify_theorem2(
    trials: int = 1000, seed: int = 0, max_dim: int = 8, policy: NumericPolicy = DEFAULT_POLICY
) -> VerificationResult:
    rng = SplitMix64(seed)
    worst, worst2, failures = 0.0, 0.0, 0
    for _ in range(trials):
        decohered, h, two_draw = theorem2_instance(rng, max_dim, policy)
        r, r2 = abs(decohered - h), abs(two_draw - h)
        worst, worst2 = max(worst, r), max(worst2, r2)
        failures += r >= policy.entry_tol or r2 >= policy.entry_tol
    return VerificationResult("theorem2", trials, seed, max_dim, policy.entry_tol, worst, worst2, failures)
