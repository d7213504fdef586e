"""Fermion-to-qubit encodings on interaction graphs.

The package compiles fermionic Hamiltonians whose two-mode interactions live
on a graph into qubit Pauli Hamiltonians through three encodings (one qubit
per edge, and two vertex-local variants: error-correcting and log-weight),
builds the associated stabilizer codes, and verifies their algebraic,
weight-bound, error-correction, and spectral-equivalence properties.
"""

from .distance import (
    CorrectabilityResult,
    LogicalWitness,
    WitnessSweepReport,
    classify,
    distance_report,
    find_low_weight_logicals,
    lemma1_witness_sweep,
    random_port_assignment,
    seeded_orderings,
    single_qubit_errors_correctable,
)
from .encoding import (
    EncodingMap,
    gse_encode,
    mode_family_degree6,
    mode_family_fenwick,
    mode_family_general,
    path_operator,
    superfast_encode,
)
from .errors import (
    CompileError,
    ConsistencyError,
    DimensionError,
    PreconditionError,
    ResourceError,
    SfencError,
    StructureError,
    ValidationError,
)
from .fermion import (
    FermionHamiltonian,
    FermionTerm,
    QubitHamiltonian,
    compile_hamiltonian,
    term_to_edge_algebra,
    verify_compiled_commutes_with_stabilizers,
)
from .graph import (
    Edge,
    InteractionGraph,
    Path,
    eulerian_cycle,
    fundamental_cycles,
    is_three_connected,
    max_parallel_edges,
    spanning_tree,
)
from .models import (
    HubbardSpec,
    hubbard_gse_graph,
    hubbard_hamiltonian,
    hubbard_superfast_aux_graph,
    plaquette_unit_cell_edges,
    two_site_hubbard,
)
from .pauli import Pauli
from .spectra import (
    DenseOperator,
    SpectrumReport,
    codespace_spectrum,
    compare_spectra,
    even_sector_spectrum,
    fock_matrix,
    pauli_matrix,
    qubit_hamiltonian_matrix,
)
from .stabilizers import (
    StabilizerGroup,
    build_stabilizer_group,
    product_of_vertex_ops_in_group,
)

__version__ = "0.1.0"
