"""Canned interferometry scenarios built from the quantum module.

Double-slit screen model
------------------------
Slits sit at x = ∓d/2, the screen at distance L. Bin b of N sits at
``x_b = W·(2b − (N−1))/(N−1)``. Each slit k contributes the amplitude

    a_k(b) = exp(−(x_b − s_k)² / (4w²)) · exp(i(2π r_k(b)/λ + φ_k)) / √2,
    r_k(b) = √(L² + (x_b − s_k)²)

Indistinguishable paths add amplitudes, |a_1 + a_2|²; a which-slit
measurement adds probabilities, |a_1|² + |a_2|². Either way the result is
normalized over the bins. The model is illustrative only.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass, field

import numpy as np

from .density import DensityMatrix
from .errors import BadBinCount, NotSubnormalized
from .policy import DEFAULT_POLICY, NumericPolicy
from .quantum import (
    Observable,
    basis_state,
    beam_splitter_unitary,
    conjugate_density,
    density_of_state,
    make_state,
    quantum_logical_entropy,
    quantum_luders,
    von_neumann_entropy,
)


@dataclass
class ScenarioReport:
    name: str
    parameters: dict
    distributions: dict[str, list[float]]
    entropy_trace: list[dict] = field(default_factory=list)
    provenance: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def _trace_entry(step: str, rho: DensityMatrix, policy: NumericPolicy) -> dict:
    return {
        "step": step,
        "logical": quantum_logical_entropy(rho),
        "von_neumann": von_neumann_entropy(rho, policy),
    }


ARM_BASIS = ("arm1", "arm2")


def scenario_mach_zehnder(
    phase: float, which_path: bool, policy: NumericPolicy = DEFAULT_POLICY
) -> ScenarioReport:
    """Photon enters arm1; BS, phase shifter diag(1, e^{iφ}), optional
    which-path measurement in the arm basis, BS, detectors D1 and D2."""
    bs = beam_splitter_unitary()
    shifter = np.diag([1.0, np.exp(1j * phase)])
    rho = density_of_state(basis_state(0, 2, ARM_BASIS), policy)
    trace = [_trace_entry("input |arm1>", rho, policy)]
    rho = conjugate_density(rho, bs, policy)
    trace.append(_trace_entry("beam splitter 1", rho, policy))
    rho = conjugate_density(rho, shifter, policy)
    trace.append(_trace_entry("phase shifter", rho, policy))
    if which_path:
        rho = quantum_luders(rho, Observable(ARM_BASIS, (1, 2)), policy)
        trace.append(_trace_entry("which-path measurement", rho, policy))
    rho = conjugate_density(rho, bs, policy)
    trace.append(_trace_entry("beam splitter 2", rho, policy))
    detectors = [float(x) for x in rho.diagonal()]
    return ScenarioReport(
        name="mach-zehnder",
        parameters={"phase": phase, "which_path": which_path, "beam_splitter": "(1/sqrt2)[[1,i],[i,1]]"},
        distributions={"detectors": detectors},
        entropy_trace=trace,
        provenance={
            "detectors": "diag(BS L(P BS rho0 BS^dag P^dag) BS^dag); L = arm-basis Luders mixture if which_path else identity",
            "logical": "1 - tr[rho^2]",
            "von_neumann": "-sum mu log2 mu, Jacobi eigenvalues",
        },
    )


def scenario_feynman_paths(
    amplitudes: Sequence[complex], distinguishable: bool, policy: NumericPolicy = DEFAULT_POLICY
) -> float:
    """Σ|α_k|² for distinguishable alternatives, |Σα_k|² otherwise."""
    amps = np.asarray(amplitudes, dtype=complex)
    # re² + im² avoids the rounding of abs() followed by squaring
    total = float(np.sum(amps.real**2 + amps.imag**2))
    if total > 1.0 + policy.probability_tol:
        raise NotSubnormalized(f"Σ|α_k|² = {total!r} exceeds 1")
    if distinguishable:
        return total
    z = amps.sum()
    return float(z.real**2 + z.imag**2)


def feynman_report(amplitudes: Sequence[complex], policy: NumericPolicy = DEFAULT_POLICY) -> ScenarioReport:
    both = {
        "distinguishable": scenario_feynman_paths(amplitudes, True, policy),
        "indistinguishable": scenario_feynman_paths(amplitudes, False, policy),
    }
    notes = []
    if both["indistinguishable"] > 1.0 + policy.probability_tol:
        notes.append(
            "indistinguishable probability exceeds 1: these amplitudes cannot all come from "
            "one unitary, so the remaining outcomes must interfere destructively"
        )
    return ScenarioReport(
        name="feynman",
        parameters={"amplitudes": [[float(a.real), float(a.imag)] for a in np.asarray(amplitudes, dtype=complex)]},
        distributions={"probability": [both["distinguishable"], both["indistinguishable"]]},
        provenance={
            "distinguishable": "sum_k |alpha_k|^2",
            "indistinguishable": "|sum_k alpha_k|^2",
        },
        notes=notes,
    )


@dataclass(frozen=True)
class DoubleSlitGeometry:
    wavelength: float = 1.0
    separation: float = 5.0
    distance: float = 100.0
    half_width: float = 40.0
    envelope_width: float = 20.0


def slit_amplitudes(
    screen_bins: int, phases: Sequence[float] = (0.0, 0.0), geometry: DoubleSlitGeometry = DoubleSlitGeometry()
) -> tuple[np.ndarray, np.ndarray]:
    if screen_bins < 2:
        raise BadBinCount(f"need at least 2 screen bins, got {screen_bins}")
    g = geometry
    n = screen_bins
    x = g.half_width * (2.0 * np.arange(n) - (n - 1)) / (n - 1)
    out = []
    for s, phi in zip((-g.separation / 2.0, g.separation / 2.0), phases):
        dx = x - s
        r = np.sqrt(g.distance**2 + dx**2)
        envelope = np.exp(-(dx**2) / (4.0 * g.envelope_width**2))
        out.append(envelope * np.exp(1j * (2.0 * math.pi * r / g.wavelength + phi)) / math.sqrt(2.0))
    return out[0], out[1]


def scenario_double_slit(
    which_slit: bool,
    screen_bins: int = 81,
    phases: Sequence[float] = (0.0, 0.0),
    geometry: DoubleSlitGeometry = DoubleSlitGeometry(),
    policy: NumericPolicy = DEFAULT_POLICY,
) -> ScenarioReport:
    a1, a2 = slit_amplitudes(screen_bins, phases, geometry)
    if which_slit:
        intensity = np.abs(a1) ** 2 + np.abs(a2) ** 2
    else:
        intensity = np.abs(a1 + a2) ** 2
    dist = intensity / intensity.sum()

    slit_basis = ("slit1", "slit2")
    rho = density_of_state(make_state([1.0, 1.0], slit_basis), policy)
    trace = [_trace_entry("slit superposition", rho, policy)]
    if which_slit:
        rho = quantum_luders(rho, Observable(slit_basis, (1, 2)), policy)
        trace.append(_trace_entry("which-slit measurement", rho, policy))

    return ScenarioReport(
        name="double-slit",
        parameters={
            "which_slit": which_slit,
            "screen_bins": screen_bins,
            "phases": [float(p) for p in phases],
            "geometry": asdict(geometry),
        },
        distributions={"screen": [float(v) for v in dist]},
        entropy_trace=trace,
        provenance={
            "screen": "|a1+a2|^2 normalized" if not which_slit else "|a1|^2+|a2|^2 normalized",
            "amplitude": "a_k = exp(-(x-s_k)^2/(4w^2)) exp(i(2 pi r_k/lambda + phi_k))/sqrt2",
        },
    )
