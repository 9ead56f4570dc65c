"""Partition logic, logical entropy and their quantum generalization."""

from .density import DensityMatrix
from .errors import PartitionLogicError
from .logical import (
    IncidenceMatrix,
    classical_luders,
    classical_luders_fast,
    coherence_amplitudes,
    density_of_partition,
    density_of_subset,
    diagonal_relation,
    dit_fraction,
    incidence_matrix,
    logical_entropy_density,
    logical_entropy_partition,
    shannon_entropy_partition,
    square_relation,
    zeroed_amplitude_sum,
)
from .partitions import (
    FiniteUniverse,
    NumericalAttribute,
    PairRelation,
    Partition,
    all_partitions,
    discrete,
    dit_count,
    dit_set,
    event_probability,
    from_attribute,
    indiscrete,
    indit_set,
    is_complete,
    join,
    join_all,
    make_partition,
    refines,
)
from .policy import DEFAULT_POLICY, NumericPolicy
from .quantum import (
    Hamiltonian,
    MeasurementOutcome,
    Observable,
    StateVector,
    beam_splitter_unitary,
    born_probabilities,
    correlation_observable,
    csco_join,
    decohered_coherence_sum,
    density_of_state,
    eigen_partition,
    full_csco_measurement,
    inner_product,
    is_definite,
    make_state,
    measure_sample,
    measure_samples,
    phase_equal,
    quantum_logical_entropy,
    quantum_luders,
    tensor_product,
    unitary_evolve,
    von_neumann_entropy,
)
from .rng import SplitMix64
from .sets import SetKet, overlap, set_born, set_norm, z2_add

__version__ = "0.1.0"
