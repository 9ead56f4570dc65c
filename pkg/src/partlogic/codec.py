"""JSON documents for universes, partitions, densities, states and observables.

Indices are 0-based. Complex data is split into ``re`` and ``im`` arrays;
``im`` may be omitted for real inputs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .density import DensityMatrix
from .errors import ParseError
from .partitions import FiniteUniverse, NumericalAttribute, Partition, make_partition
from .policy import DEFAULT_POLICY, NumericPolicy
from .quantum import MeasurementOutcome, Observable, StateVector
from .sets import SetKet


def _get(doc, key: str, kind: str):
    if not isinstance(doc, dict):
        raise ParseError(f"{kind} must be a JSON object")
    if key not in doc:
        raise ParseError(f"{kind} is missing {key!r}")
    return doc[key]


def _number(x, what: str):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ParseError(f"{what}: {x!r} is not a number")
    return x


def _numbers(xs, what: str) -> list:
    if not isinstance(xs, list):
        raise ParseError(f"{what} must be a list")
    return [_number(x, what) for x in xs]


def universe_from_json(doc) -> FiniteUniverse:
    labels = _get(doc, "labels", "universe")
    if not isinstance(labels, list):
        raise ParseError("universe labels must be a list")
    probs = doc.get("probabilities")
    if probs is not None:
        # integers stay exact so that e.g. [1, 0] sums to exactly 1
        probs = [Fraction(p) if isinstance(p, int) else p for p in _numbers(probs, "probabilities")]
    return FiniteUniverse(labels, probs)


def universe_to_json(u: FiniteUniverse) -> dict:
    return {"labels": list(u.labels), "probabilities": [float(p) for p in u.probabilities]}


def _index_list(xs, what: str) -> list[int]:
    if not isinstance(xs, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in xs):
        raise ParseError(f"{what} must be a list of integer indices")
    return xs


def partition_from_json(doc, universe: FiniteUniverse) -> Partition:
    blocks = _get(doc, "blocks", "partition")
    if not isinstance(blocks, list):
        raise ParseError("partition blocks must be a list")
    return make_partition(universe, [_index_list(b, "block") for b in blocks])


def partition_to_json(p: Partition) -> dict:
    return {"blocks": [list(b) for b in p.blocks]}


def attribute_from_json(doc, universe: FiniteUniverse) -> NumericalAttribute:
    return NumericalAttribute(universe, tuple(_numbers(_get(doc, "values", "attribute"), "attribute values")))


def subset_from_json(doc) -> list[int]:
    if isinstance(doc, list):
        return _index_list(doc, "subset")
    return _index_list(_get(doc, "support", "subset"), "subset support")


def setket_from_json(doc, universe: FiniteUniverse) -> SetKet:
    return SetKet(universe, subset_from_json(doc))


def setket_to_json(s: SetKet) -> dict:
    return {"support": sorted(s.support)}


def _complex_matrix(doc, dim: int) -> np.ndarray:
    re = np.array(_get(doc, "re", "density"), dtype=float)
    im = np.array(doc.get("im", np.zeros((dim, dim)).tolist()), dtype=float)
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ParseError(f"density re/im must both be {dim}×{dim}")
    return re + 1j * im


def density_from_json(doc, policy: NumericPolicy = DEFAULT_POLICY) -> DensityMatrix:
    dim = _get(doc, "dim", "density")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("density dim must be a positive integer")
    try:
        entries = _complex_matrix(doc, dim)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"density entries are malformed: {exc}") from None
    return DensityMatrix(entries, doc.get("basis"), policy)


def density_to_json(rho: DensityMatrix) -> dict:
    return {
        "dim": rho.dim,
        "basis": list(rho.basis_labels),
        "re": rho.entries.real.tolist(),
        "im": rho.entries.imag.tolist(),
    }


def state_from_json(doc) -> StateVector:
    basis = _get(doc, "basis", "state")
    re = _numbers(_get(doc, "re", "state"), "state re")
    im = _numbers(doc.get("im", [0.0] * len(re)), "state im")
    if len(im) != len(re):
        raise ParseError("state re and im must have equal length")
    return StateVector(np.array(re) + 1j * np.array(im), basis)


def state_to_json(psi: StateVector) -> dict:
    return {
        "basis": list(psi.basis_labels),
        "re": psi.amplitudes.real.tolist(),
        "im": psi.amplitudes.imag.tolist(),
    }


def observable_from_json(doc, cls=Observable) -> Observable:
    basis = _get(doc, "basis", "observable")
    values = _numbers(_get(doc, "eigenvalues", "observable"), "eigenvalues")
    return cls(tuple(basis), tuple(values))


def observable_to_json(obs: Observable) -> dict:
    return {"basis": list(obs.basis_labels), "eigenvalues": list(obs.eigenvalues)}


def measurement_to_json(m: MeasurementOutcome) -> dict:
    return {"eigenvalue": m.eigenvalue, "probability": m.probability, "post_state": state_to_json(m.post_state)}


def entropy_to_json(logical: float, shannon: float) -> dict:
    return {"logical": logical, "shannon": shannon}
