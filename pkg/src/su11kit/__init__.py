"""su11kit: finite-matrix realizations of the su(1,1) and spin ladder algebras.

The package builds every realization as dense matrices on truncated state
spaces, verifies the defining commutators and Casimir closed forms behind an
interior projection, and reproduces the exact reduction of two nonlinear
coupled oscillators to a free particle on the pair ladder.
"""

from .algebra import (
    CheckSpec,
    casimir_spin,
    casimir_su11,
    check_adjointness,
    check_casimir,
    check_commutators,
    check_transfo,
    compare_triples,
    masked_interior,
)
from .linops import (
    BasisMismatchError,
    Check,
    CheckReport,
    CircleBasis,
    FockBasis,
    OperatorMatrix,
    commutator,
    diagonal,
    hermitian_eigensystem,
    identity,
    interior_projector,
    maxabs_norm,
    merge_reports,
    tensor,
    unitary_exp,
    zeros,
)
from .reduction import (
    ModelParams,
    ReductionResult,
    build_direct_hamiltonian,
    build_k_form,
    free_params,
    p0_of,
    pair_energy_closed_form,
    pair_subspace,
    verify_reduction,
)
from .reps import (
    AlgebraTriple,
    RepParams,
    bose_ladder,
    circle_momentum,
    hp_spin,
    mp_realization,
    perelomov_realization,
    quadratures,
    saf_bose_form,
    saf_realization,
    two_mode,
    villain_spin,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraTriple",
    "BasisMismatchError",
    "Check",
    "CheckReport",
    "CheckSpec",
    "CircleBasis",
    "FockBasis",
    "ModelParams",
    "OperatorMatrix",
    "ReductionResult",
    "RepParams",
    "bose_ladder",
    "build_direct_hamiltonian",
    "build_k_form",
    "casimir_spin",
    "casimir_su11",
    "check_adjointness",
    "check_casimir",
    "check_commutators",
    "check_transfo",
    "circle_momentum",
    "commutator",
    "compare_triples",
    "diagonal",
    "free_params",
    "hermitian_eigensystem",
    "hp_spin",
    "identity",
    "interior_projector",
    "masked_interior",
    "maxabs_norm",
    "merge_reports",
    "mp_realization",
    "p0_of",
    "pair_energy_closed_form",
    "pair_subspace",
    "perelomov_realization",
    "quadratures",
    "saf_bose_form",
    "saf_realization",
    "tensor",
    "two_mode",
    "unitary_exp",
    "verify_reduction",
    "villain_spin",
    "zeros",
]
