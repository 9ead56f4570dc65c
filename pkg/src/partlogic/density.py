"""Density matrices shared by the classical and quantum modules."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatch, DimensionMismatch, InvalidDensity, NotAConformalPair
from .policy import DEFAULT_POLICY, NumericPolicy

_PROBE_SEED = 20_240_601


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, trace-one, positive-semidefinite complex matrix.

    Construction validates all three properties against ``policy``. PSD is
    checked with random unit probe vectors rather than an eigensolve.
    """

    entries: np.ndarray
    basis_labels: tuple[str, ...]

    def __init__(
        self,
        entries,
        basis_labels: Sequence[str] | None = None,
        policy: NumericPolicy = DEFAULT_POLICY,
    ):
        a = _frozen(entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise InvalidDensity(f"density matrix must be square and non-empty, got shape {a.shape}")
        dim = a.shape[0]
        labels = tuple(basis_labels) if basis_labels is not None else tuple(f"u{i + 1}" for i in range(dim))
        if len(labels) != dim:
            raise DimensionMismatch(f"{len(labels)} basis labels for dimension {dim}")
        if len(set(labels)) != dim:
            raise InvalidDensity("basis labels must be distinct")
        if not np.all(np.isfinite(a)):
            raise InvalidDensity("entries must be finite")
        herm = np.max(np.abs(a - a.conj().T))
        if herm > policy.hermitian_tol:
            raise InvalidDensity(f"not Hermitian (max asymmetry {herm:.3e})")
        tr = np.trace(a)
        if abs(tr - 1.0) > policy.trace_tol:
            raise InvalidDensity(f"trace is {tr.real:.15g}, not 1")
        rng = np.random.default_rng(_PROBE_SEED)
        probes = rng.normal(size=(policy.psd_probes, dim)) + 1j * rng.normal(size=(policy.psd_probes, dim))
        probes /= np.linalg.norm(probes, axis=1, keepdims=True)
        quad = np.einsum("ki,ij,kj->k", probes.conj(), a, probes).real
        # the diagonal is a free set of probes
        worst = min(quad.min(), np.diag(a).real.min())
        if worst < -policy.psd_tol:
            raise InvalidDensity(f"not positive semidefinite (probe value {worst:.3e})")
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "basis_labels", labels)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def purity(self) -> float:
        """tr[ρ²]."""
        return float(np.trace(self.entries @ self.entries).real)

    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries).real.copy()

    def is_pure(self, tol: float = 1e-10) -> bool:
        return abs(self.purity() - 1.0) <= tol

    def allclose(self, other: DensityMatrix, tol: float = DEFAULT_POLICY.entry_tol) -> bool:
        return self.basis_labels == other.basis_labels and bool(
            np.max(np.abs(self.entries - other.entries)) <= tol
        )

    def check_basis(self, labels: Sequence[str]) -> None:
        if tuple(labels) != self.basis_labels:
            raise BasisMismatch(f"basis {tuple(labels)} does not match {self.basis_labels}")

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, basis={self.basis_labels})"


def projector(dim: int, block: Sequence[int]) -> np.ndarray:
    """Diagonal 0/1 projection matrix onto the span of ``block``."""
    p = np.zeros((dim, dim))
    idx = list(block)
    p[idx, idx] = 1.0
    return p


def luders_sum(entries: np.ndarray, blocks: Sequence[Sequence[int]]) -> np.ndarray:
    """Σ_j P_j ρ P_j with the projectors materialized as matrices."""
    dim = entries.shape[0]
    out = np.zeros_like(entries, dtype=complex)
    for block in blocks:
        p = projector(dim, block)
        out += p @ entries @ p
    return out


def luders_mask(entries: np.ndarray, block_index: np.ndarray) -> np.ndarray:
    """Same result as :func:`luders_sum`, by masking cross-block entries."""
    keep = block_index[:, None] == block_index[None, :]
    return np.where(keep, entries, 0.0)


def zeroed_sum(rho: DensityMatrix, rho_hat: DensityMatrix, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Σ |ρ_ij|² over the entries that ``rho_hat`` has set to zero."""
    if rho.dim != rho_hat.dim:
        raise DimensionMismatch(f"dimensions {rho.dim} and {rho_hat.dim} differ")
    a, b = rho.entries, rho_hat.entries
    zero = np.abs(b) <= policy.entry_tol
    kept = np.abs(b - a) <= policy.entry_tol
    bad = ~(zero | kept)
    if np.any(bad):
        i, j = map(int, np.argwhere(bad)[0])
        raise NotAConformalPair(
            f"entry ({i},{j}) is {b[i, j]:.6g}, neither the original {a[i, j]:.6g} nor zero"
        )
    return float(np.sum(np.abs(a[zero]) ** 2))


def logical_entropy(rho: DensityMatrix) -> float:
    """h(ρ) = 1 − tr[ρ²]."""
    return 1.0 - rho.purity()
