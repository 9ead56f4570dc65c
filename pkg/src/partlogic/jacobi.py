"""Cyclic Jacobi eigensolver for small dense Hermitian matrices."""

from __future__ import annotations

import math

import numpy as np

from .errors import EigensolveFailure, InvalidDensity
from .policy import DEFAULT_POLICY


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def jacobi_eigh(
    matrix,
    tol: float = DEFAULT_POLICY.jacobi_tol,
    max_sweeps: int = DEFAULT_POLICY.jacobi_max_sweeps,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.

    Each rotation first removes the phase of the pivot a_pq with
    diag(1, e^{-iφ}) on the (p, q) plane, then applies the real Givens rotation
    that zeroes it. Sweeps cycle through all p < q until the off-diagonal
    Frobenius norm drops below ``tol``.
    """
    a = np.array(matrix, dtype=complex, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidDensity(f"need a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if np.max(np.abs(a - a.conj().T), initial=0.0) > 1e-9 * max(1.0, np.max(np.abs(a), initial=0.0)):
        raise InvalidDensity("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)

    for _ in range(max_sweeps):
        if _off_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                b = abs(apq)
                if b == 0.0:
                    continue
                phase = complex(apq.real / b, apq.imag / b)
                theta = 0.5 * math.atan2(2.0 * b, (a[p, p] - a[q, q]).real)
                c, s = math.cos(theta), math.sin(theta)
                # J acts on columns p, q: J = diag(1, conj(phase)) @ [[c, -s], [s, c]]
                jpp, jpq = c, -s
                jqp, jqq = s * phase.conjugate(), c * phase.conjugate()
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p * jpp + col_q * jqp
                a[:, q] = col_p * jpq + col_q * jqq
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(jpp) * row_p + np.conj(jqp) * row_q
                a[q, :] = np.conj(jpq) * row_p + np.conj(jqq) * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp * jpp + vq * jqp
                v[:, q] = vp * jpq + vq * jqq
    else:
        if _off_norm(a) >= tol:
            raise EigensolveFailure(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def jacobi_eigvalsh(matrix, tol: float = DEFAULT_POLICY.jacobi_tol) -> np.ndarray:
    return jacobi_eigh(matrix, tol)[0]
