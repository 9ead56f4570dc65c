"""Finite-dimensional states, observables as eigenvalue functions, Born rule,
quantum Lüders measurement, entropies and unitary evolution."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .density import DensityMatrix, logical_entropy, luders_sum, zeroed_sum
from .errors import (
    BasisMismatch,
    DimensionMismatch,
    EmptyList,
    NotACSCO,
    NotNormalized,
    PartitionLogicError,
    ZeroVector,
)
from .jacobi import jacobi_eigvalsh
from .partitions import FiniteUniverse, Partition, group_values, join_all
from .policy import DEFAULT_POLICY, NumericPolicy
from .rng import SplitMix64


def _default_labels(dim: int, prefix: str = "u") -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(dim))


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitudes α_i = ⟨u_i|ψ⟩ over a named orthonormal basis.

    The raw constructor accepts any non-empty vector; use :func:`make_state`
    for the normalizing/validating path.
    """

    amplitudes: np.ndarray
    basis_labels: tuple[str, ...]

    def __init__(self, amplitudes, basis_labels: Sequence[str] | None = None):
        a = np.array(amplitudes, dtype=complex, copy=True).reshape(-1)
        if a.size == 0:
            raise DimensionMismatch("a state needs at least one amplitude")
        labels = tuple(basis_labels) if basis_labels is not None else _default_labels(a.size)
        if len(labels) != a.size:
            raise DimensionMismatch(f"{len(labels)} basis labels for {a.size} amplitudes")
        if len(set(labels)) != len(labels):
            raise BasisMismatch("basis labels must be distinct")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)
        object.__setattr__(self, "basis_labels", labels)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = DEFAULT_POLICY.norm_tol) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def __repr__(self) -> str:
        terms = " + ".join(
            f"({a:.4g})|{lab}⟩" for a, lab in zip(self.amplitudes, self.basis_labels) if a != 0
        )
        return f"StateVector({terms or '0'})"


def make_state(
    amplitudes,
    basis: Sequence[str] | None = None,
    normalize: bool = True,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> StateVector:
    psi = StateVector(amplitudes, basis)
    norm = psi.norm()
    if norm == 0.0:
        raise ZeroVector("cannot build a state from the zero vector")
    if normalize:
        return StateVector(psi.amplitudes / norm, psi.basis_labels)
    if abs(norm - 1.0) > policy.norm_tol:
        raise NotNormalized(f"state has norm {norm!r}")
    return psi


def basis_state(index: int, dim: int, basis: Sequence[str] | None = None) -> StateVector:
    a = np.zeros(dim, dtype=complex)
    a[index] = 1.0
    return StateVector(a, basis)


def phase_equal(phi: StateVector, psi: StateVector, tol: float = DEFAULT_POLICY.entry_tol) -> bool:
    """Equality up to a global phase, aligned on the first non-negligible amplitude."""
    if phi.basis_labels != psi.basis_labels:
        return False
    a, b = phi.amplitudes, psi.amplitudes
    nz = np.flatnonzero(np.abs(a) > tol)
    if nz.size == 0:
        return bool(np.all(np.abs(b) <= tol))
    k = nz[0]
    if abs(b[k]) <= tol:
        return False
    rot = (a[k] / abs(a[k])) / (b[k] / abs(b[k]))
    return bool(np.max(np.abs(a - rot * b)) <= tol)


@dataclass(frozen=True)
class Observable:
    """Hermitian operator given by an orthonormal eigenbasis and the
    eigenvalue f(u_i) attached to each basis vector."""

    basis_labels: tuple[str, ...]
    eigenvalues: tuple[float, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.basis_labels)
        values = tuple(self.eigenvalues)
        if len(set(labels)) != len(labels):
            raise BasisMismatch("basis labels must be distinct")
        if len(values) != len(labels):
            raise DimensionMismatch(f"{len(values)} eigenvalues for {len(labels)} basis vectors")
        if not labels:
            raise DimensionMismatch("an observable needs at least one basis vector")
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "eigenvalues", values)

    @classmethod
    def from_values(cls, eigenvalues: Sequence[float], basis: Sequence[str] | None = None) -> Observable:
        basis = tuple(basis) if basis is not None else _default_labels(len(eigenvalues))
        return cls(basis, tuple(eigenvalues))

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def universe(self) -> FiniteUniverse:
        return FiniteUniverse(self.basis_labels)

    def matrix(self) -> np.ndarray:
        return np.diag(np.array([float(v) for v in self.eigenvalues])).astype(complex)

    def spectrum(self, policy: NumericPolicy = DEFAULT_POLICY) -> list[tuple[float, tuple[int, ...]]]:
        """Distinct eigenvalues λ_j (ascending) with the basis indices of each eigenspace."""
        return [(v, tuple(sorted(idx))) for v, idx in group_values(self.eigenvalues, policy.value_tol)]


class Hamiltonian(Observable):
    """Observable used as the generator of U(t) = e^{iHt}."""


@dataclass(frozen=True)
class MeasurementOutcome:
    eigenvalue: float
    probability: float
    post_state: StateVector


def _check_same_basis(a: Sequence[str], b: Sequence[str]) -> None:
    if tuple(a) != tuple(b):
        raise BasisMismatch(f"bases differ: {tuple(a)} vs {tuple(b)}")


def inner_product(phi: StateVector, psi: StateVector) -> complex:
    """⟨φ|ψ⟩ = Σ conj(φ_i) ψ_i."""
    _check_same_basis(phi.basis_labels, psi.basis_labels)
    return complex(np.vdot(phi.amplitudes, psi.amplitudes))


def _require_normalized(psi: StateVector, policy: NumericPolicy) -> None:
    if not psi.is_normalized(policy.norm_tol):
        raise NotNormalized(f"state has norm {psi.norm()!r}")


def density_of_state(psi: StateVector, policy: NumericPolicy = DEFAULT_POLICY) -> DensityMatrix:
    """ρ(ψ) = |ψ⟩⟨ψ|, entries α_i α_j*."""
    _require_normalized(psi, policy)
    a = psi.amplitudes
    return DensityMatrix(np.outer(a, a.conj()), psi.basis_labels, policy)


def born_probabilities(psi: StateVector) -> np.ndarray:
    """|⟨u_i|ψ⟩|² / ⟨ψ|ψ⟩ for each basis vector."""
    weights = np.abs(psi.amplitudes) ** 2
    total = weights.sum()
    if total == 0.0:
        raise ZeroVector("Born rule is undefined for the zero vector")
    return weights / total


def eigen_partition(obs: Observable, policy: NumericPolicy = DEFAULT_POLICY) -> Partition:
    """Partition of the eigenbasis into the inverse images f⁻¹(λ_j)."""
    return Partition(obs.universe, tuple(idx for _, idx in obs.spectrum(policy)))


def eigenspace_probabilities(
    psi: StateVector, obs: Observable, policy: NumericPolicy = DEFAULT_POLICY
) -> list[tuple[float, float]]:
    """(λ_j, ‖P_j ψ‖²) for every distinct eigenvalue, ascending."""
    _check_same_basis(psi.basis_labels, obs.basis_labels)
    weights = born_probabilities(psi)
    return [(lam, float(weights[list(idx)].sum())) for lam, idx in obs.spectrum(policy)]


def quantum_luders(
    rho: DensityMatrix, obs: Observable, policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    """ρ̂ = Σ_j P_j ρ P_j over the eigenspace projectors of ``obs``.

    ``rho`` must be written in the observable's eigenbasis.
    """
    _check_same_basis(rho.basis_labels, obs.basis_labels)
    blocks = [idx for _, idx in obs.spectrum(policy)]
    return DensityMatrix(luders_sum(rho.entries, blocks), rho.basis_labels, policy)


def quantum_logical_entropy(rho: DensityMatrix) -> float:
    """h(ρ) = 1 − tr[ρ²]."""
    return logical_entropy(rho)


def decohered_coherence_sum(
    rho: DensityMatrix, rho_hat: DensityMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> float:
    """Σ |α_i α_i'*|² over the coherences that the measurement zeroed."""
    _check_same_basis(rho.basis_labels, rho_hat.basis_labels)
    return zeroed_sum(rho, rho_hat, policy)


def two_measurement_difference(
    psi: StateVector, obs: Observable, policy: NumericPolicy = DEFAULT_POLICY
) -> float:
    """Σ_{j≠k} q_j q_k: chance that two independent measurements disagree."""
    q = [p for _, p in eigenspace_probabilities(psi, obs, policy)]
    return float(sum(q[j] * q[k] for j in range(len(q)) for k in range(len(q)) if j != k))


def von_neumann_entropy(rho: DensityMatrix, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """−Σ μ log₂ μ over the eigenvalues of ρ (Jacobi eigensolve)."""
    mu = jacobi_eigvalsh(rho.entries, policy.jacobi_tol)
    return 0.0 - float(sum(m * math.log2(m) for m in mu if m > 0.0))


def _measurement(
    psi: StateVector, obs: Observable, policy: NumericPolicy
) -> tuple[list[tuple[float, tuple[int, ...]]], list[float]]:
    _require_normalized(psi, policy)
    _check_same_basis(psi.basis_labels, obs.basis_labels)
    spectrum = obs.spectrum(policy)
    weights = np.abs(psi.amplitudes) ** 2
    probs = [float(weights[list(idx)].sum()) for _, idx in spectrum]
    return spectrum, probs


def _pick(probs: Sequence[float], u: float) -> int:
    acc = 0.0
    for j, q in enumerate(probs):
        acc += q
        if u < acc:
            return j
    # rounding left u above the final cumulative sum
    return max(j for j, q in enumerate(probs) if q > 0)


def _collapse(psi: StateVector, block: Sequence[int]) -> StateVector:
    a = np.zeros(psi.dim, dtype=complex)
    idx = list(block)
    a[idx] = psi.amplitudes[idx]
    return StateVector(a / np.linalg.norm(a), psi.basis_labels)


def measure_sample(
    psi: StateVector, obs: Observable, rng_seed: int, policy: NumericPolicy = DEFAULT_POLICY
) -> MeasurementOutcome:
    """One projective measurement drawn with SplitMix64 seeded by ``rng_seed``."""
    spectrum, probs = _measurement(psi, obs, policy)
    j = _pick(probs, SplitMix64(rng_seed).random())
    lam, block = spectrum[j]
    return MeasurementOutcome(float(lam), probs[j], _collapse(psi, block))


def measure_samples(
    psi: StateVector, obs: Observable, n: int, rng_seed: int, policy: NumericPolicy = DEFAULT_POLICY
) -> list[float]:
    """Eigenvalues from ``n`` independent measurements of fresh copies of ψ."""
    spectrum, probs = _measurement(psi, obs, policy)
    rng = SplitMix64(rng_seed)
    return [float(spectrum[_pick(probs, rng.random())][0]) for _ in range(n)]


def is_definite(psi: StateVector, obs: Observable, policy: NumericPolicy = DEFAULT_POLICY):
    """The eigenvalue ψ definitely has under ``obs``, or None if indefinite."""
    _require_normalized(psi, policy)
    _check_same_basis(psi.basis_labels, obs.basis_labels)
    support = set(np.flatnonzero(np.abs(psi.amplitudes) > policy.support_tol).tolist())
    for lam, idx in obs.spectrum(policy):
        if support <= set(idx):
            return lam
    return None


def tensor_product(psi: StateVector, phi: StateVector) -> StateVector:
    """ψ ⊗ φ with basis labels ``a⊗b`` in row-major order."""
    labels = [f"{a}⊗{b}" for a in psi.basis_labels for b in phi.basis_labels]
    return StateVector(np.kron(psi.amplitudes, phi.amplitudes), labels)


def product_basis(labels_a: Sequence[str], labels_b: Sequence[str]) -> tuple[str, ...]:
    return tuple(f"{a}⊗{b}" for a in labels_a for b in labels_b)


def schmidt_rank(psi: StateVector, dim_a: int, dim_b: int, tol: float = 1e-10) -> int:
    """Rank of the dim_a × dim_b amplitude matrix; 1 iff ψ is a product state."""
    if dim_a * dim_b != psi.dim:
        raise DimensionMismatch(f"{dim_a}×{dim_b} does not factor dimension {psi.dim}")
    sv = np.linalg.svd(psi.amplitudes.reshape(dim_a, dim_b), compute_uv=False)
    return int(np.sum(sv > tol))


def correlation_observable(
    dim_a: int,
    dim_b: int,
    labels_a: Sequence[str] | None = None,
    labels_b: Sequence[str] | None = None,
) -> Observable:
    """Eigenvalue 1 on |a_i b_j⟩ with i = j, 0 otherwise."""
    if dim_a != dim_b:
        raise DimensionMismatch(f"index sameness needs equal dimensions, got {dim_a} and {dim_b}")
    labels_a = labels_a or _default_labels(dim_a, "a")
    labels_b = labels_b or _default_labels(dim_b, "b")
    values = [1 if i == j else 0 for i in range(dim_a) for j in range(dim_b)]
    return Observable(product_basis(labels_a, labels_b), tuple(values))


def subsystem_index_observable(
    dim_a: int,
    dim_b: int,
    subsystem: str,
    labels_a: Sequence[str] | None = None,
    labels_b: Sequence[str] | None = None,
) -> Observable:
    """The index of subsystem ``"A"`` or ``"B"`` alone, on the product basis."""
    labels_a = labels_a or _default_labels(dim_a, "a")
    labels_b = labels_b or _default_labels(dim_b, "b")
    if subsystem not in ("A", "B"):
        raise PartitionLogicError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    values = [i if subsystem == "A" else j for i in range(dim_a) for j in range(dim_b)]
    return Observable(product_basis(labels_a, labels_b), tuple(values))


def csco_join(
    observables: Sequence[Observable], policy: NumericPolicy = DEFAULT_POLICY
) -> tuple[Partition, bool]:
    """Join of the eigen-partitions, and whether it is discrete."""
    if not observables:
        raise EmptyList("need at least one observable")
    for obs in observables[1:]:
        _check_same_basis(observables[0].basis_labels, obs.basis_labels)
    joined = join_all([eigen_partition(o, policy) for o in observables])
    return joined, joined.is_discrete()


def full_csco_measurement(
    rho: DensityMatrix, observables: Sequence[Observable], policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    _, complete = csco_join(observables, policy)
    if not complete:
        raise NotACSCO("the observables' eigen-partitions do not join to the discrete partition")
    for obs in observables:
        rho = quantum_luders(rho, obs, policy)
    return rho


def evolution_phases(h: Observable, t: float) -> np.ndarray:
    return np.exp(1j * np.array([float(v) for v in h.eigenvalues]) * t)


def evolution_matrix(h: Observable, t: float) -> np.ndarray:
    """U(t) = e^{iHt} in the eigenbasis of H."""
    return np.diag(evolution_phases(h, t))


def unitary_evolve(psi: StateVector, h: Observable, t: float) -> StateVector:
    """α_i ↦ e^{iλ_i t} α_i in the eigenbasis of H."""
    _check_same_basis(psi.basis_labels, h.basis_labels)
    return StateVector(evolution_phases(h, t) * psi.amplitudes, psi.basis_labels)


def apply_unitary(psi: StateVector, u: np.ndarray) -> StateVector:
    u = np.asarray(u, dtype=complex)
    if u.shape != (psi.dim, psi.dim):
        raise DimensionMismatch(f"unitary of shape {u.shape} on a {psi.dim}-dimensional state")
    return StateVector(u @ psi.amplitudes, psi.basis_labels)


def conjugate_density(
    rho: DensityMatrix, u: np.ndarray, policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    """U ρ U†."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (rho.dim, rho.dim):
        raise DimensionMismatch(f"unitary of shape {u.shape} on a {rho.dim}-dimensional density")
    out = u @ rho.entries @ u.conj().T
    return DensityMatrix(0.5 * (out + out.conj().T), rho.basis_labels, policy)


def evolve_density(
    rho: DensityMatrix, h: Observable, t: float, policy: NumericPolicy = DEFAULT_POLICY
) -> DensityMatrix:
    _check_same_basis(rho.basis_labels, h.basis_labels)
    return conjugate_density(rho, evolution_matrix(h, t), policy)


_BS = np.array([[1.0, 1j], [1j, 1.0]]) / math.sqrt(2.0)


def beam_splitter_unitary() -> np.ndarray:
    """Symmetric beam splitter (1/√2)[[1, i], [i, 1]]."""
    return _BS.copy()
