from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class NumericPolicy:
    """Every floating-point tolerance used by the library, in one place.

    Pass a custom instance to any operation that accepts ``policy=`` (or use
    ``--tolerance`` on the CLI) instead of mutating module state.
    """

    entry_tol: float = 1e-10
    trace_tol: float = 1e-12
    hermitian_tol: float = 1e-12
    psd_tol: float = 1e-10
    psd_probes: int = 32
    probability_tol: float = 1e-12
    norm_tol: float = 1e-12
    value_tol: float = 1e-9
    support_tol: float = 1e-12
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100
    max_pair_universe: int = 64

    def with_entry_tol(self, tol: float) -> NumericPolicy:
        return replace(self, entry_tol=tol)


DEFAULT_POLICY = NumericPolicy()
