"""Computational algebra for finite-dimensional quantum systems.

The package constructs the shift/clock operator pair and the families built
on it (monomial operator bases, Pauli and order-l generator arrays,
canonical per-site pairs), verifies their defining identities numerically,
decides universality of generator sets by Lie-algebra commutator closure,
and applies gates to multi-qudit state vectors.  A CLI (``quditkit``)
exposes generation, verification, closure, decomposition, and circuit
application over flat JSON files.
"""

from .linalg import (
    ExtendResult,
    as_matrix,
    commutator,
    dagger,
    hs_inner,
    hs_norm,
    mat_mul,
    matrix_exp,
    max_abs,
    orthonormal_extend,
    tensor_product,
)
from .weyl import (
    RootOfUnity,
    clock_matrix,
    fermat_power_residual,
    reflection_matrix,
    rotated_basis_element,
    scalar_factorization_residuals,
    shift_matrix,
    tau_matrices,
    weyl_commutation_residual,
    weyl_commutator_coefficient,
    weyl_decompose,
    weyl_element,
    weyl_reconstruct,
)
from .clifford import (
    GENERATOR_SET_NAMES,
    GeneratorFamily,
    NoMatchingPowerError,
    biproducts,
    canonical_generators,
    clifford_generators,
    commutation_matrix,
    generalized_generators,
    named_generator_set,
    pauli,
    qudit_universal_set,
    universal_augmentation,
)
from .universality import (
    COMPLEX_TRACELESS,
    ClosureResult,
    GeneratorSet,
    MODES,
    NonConvergenceError,
    REAL_ANTIHERMITIAN,
    closure,
    gate_from_generator,
    hermitian_split,
    is_universal,
    prepare_generators,
    traceless_project,
)
from .circuit import (
    GateSpec,
    QuditState,
    apply_full,
    apply_kgate,
    basis_state,
    cyclic_shift_gate,
    embed_kgate,
    momentum_basis,
    perm_from_function,
    qft_matrix,
    reversible_embedding,
)
from .verify import VerifyCheck, VerifyReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # linalg
    "ExtendResult", "as_matrix", "commutator", "dagger", "hs_inner", "hs_norm",
    "mat_mul", "matrix_exp", "max_abs", "orthonormal_extend", "tensor_product",
    # weyl
    "RootOfUnity", "clock_matrix", "fermat_power_residual", "reflection_matrix",
    "rotated_basis_element", "scalar_factorization_residuals", "shift_matrix",
    "tau_matrices", "weyl_commutation_residual", "weyl_commutator_coefficient",
    "weyl_decompose", "weyl_element", "weyl_reconstruct",
    # clifford
    "GENERATOR_SET_NAMES", "GeneratorFamily", "NoMatchingPowerError", "biproducts",
    "canonical_generators", "clifford_generators", "commutation_matrix",
    "generalized_generators", "named_generator_set", "pauli",
    "qudit_universal_set", "universal_augmentation",
    # universality
    "COMPLEX_TRACELESS", "ClosureResult", "GeneratorSet", "MODES",
    "NonConvergenceError", "REAL_ANTIHERMITIAN", "closure", "gate_from_generator",
    "hermitian_split", "is_universal", "prepare_generators", "traceless_project",
    # circuit
    "GateSpec", "QuditState", "apply_full", "apply_kgate", "basis_state",
    "cyclic_shift_gate", "embed_kgate", "momentum_basis", "perm_from_function",
    "qft_matrix", "reversible_embedding",
    # verify
    "VerifyCheck", "VerifyReport", "run_verification",
]
