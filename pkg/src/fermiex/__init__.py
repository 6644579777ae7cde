"""Finite-dimensional multi-fermion state algebra.

Models dense n-fermion amplitude tensors over a spatial-mode x spin basis,
antisymmetrizes them, detects states whose normalized form degenerates to the
undetermined 0/0 (generalized exclusion), and classifies identical-particle
entanglement via Slater and Schmidt rank.
"""

from ._backend import backend_name, compiled_available
from .antisym import (
    CONDITION_ANTISYMMETRIC_SPATIAL,
    CONDITION_GENERIC_VANISHING,
    CONDITION_NONE,
    CONDITION_PARALLEL_SPINS,
    CONDITION_PAULI_EQUAL_STATES,
    CONDITION_SYMMETRIC_SPATIAL,
    ExclusionVerdict,
    antisymmetrize,
    exchange_antisymmetry_check,
    is_excluded,
    pair_symmetric,
    pair_symmetry_condition,
    swap_pair,
    symmetric_pairs,
)
from .basis import BasisSpec, basis_index_of, composite_index, composite_pair
from .errors import (
    ConfigError,
    DuplicateError,
    ExcludedStateError,
    FermiexError,
    InvalidDensityError,
    LabelError,
    NormalizationError,
    NotAntisymmetricError,
    ParseError,
    ShapeError,
    SymmetryError,
    ZeroStateError,
)
from .factored import (
    SpatialTensor,
    SpinTensor,
    antisymmetrize_spatial,
    build_factored,
    is_fully_symmetric,
    spatial_exclusion_scan,
)
from .helium import (
    HeliumVariant,
    SlaterReport,
    SpatialMatrix,
    SpinVector,
    TwoFermionState,
    build_state,
    exclusion_catalog,
    normalization,
    overlap_kernel,
    pauli_pair,
    slater_report,
)
from .states import (
    DensityMatrix,
    NFermionTensor,
    basis_tensor,
    equal_up_to_phase,
    inner_product,
    normalize,
    partial_trace,
    product_tensor,
    purity,
)
from .stateio import MatrixFile, parse_matrix, parse_state, write_state
from .weakent import (
    QuantumNumberSet,
    SchmidtReport,
    pauli_verdict_star,
    quantum_number_set,
    rank1_truncate,
    schmidt,
)

__version__ = "0.1.0"
