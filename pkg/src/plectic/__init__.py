"""Exact computation with vector-valued multisymplectic forms.

The package provides alternating forms with exact rational coefficients,
the nondegeneracy decision for R^m-valued (k+1)-forms, the non-unital
operad of partial compositions with its entropy laws, polynomial
differential forms with exterior derivative / pullback / radial homotopy
potential, and the canonical-form machinery presenting any closed
nondegenerate form as a pullback of the universal one.
"""

from .canonical import (
    BUILTIN_EXAMPLES,
    CanonicalChart,
    PresentationRecord,
    build_embedding,
    canonical_omega,
    canonical_theta,
    cross3_example,
    omega_nondegenerate_at,
    plectic6_example,
    verify_local_presentation,
)
from .chartforms import (
    NotClosedError,
    PolyForm,
    PolyMap,
    VectorPolyForm,
    exterior_derivative,
    exterior_derivative_vector,
    poincare_potential,
    poincare_potential_vector,
    pullback,
    pullback_vector,
)
from .entropy import (
    ChainCheck,
    DoublingCheck,
    EntropyReport,
    HypothesisViolatedError,
    ScaledForm,
    ZeroComponentError,
    check_entropy_chain,
    check_entropy_doubling,
    curve_samples,
    disorder_curve_value,
    entropy,
    entropy_curve_value,
    iterated_cross_entropy,
    iterated_cross_entropy_from_vectors,
    normalize_for_chain,
)
from .exterior import ConstForm, contract, evaluate, wedge
from .linear import (
    VectorValuedForm,
    apply_linear_map,
    constant_stack,
    contraction_matrix,
    cross_product_form,
    direct_sum_form,
    is_nondegenerate,
    joint_kernel,
    standard_symplectic,
)
from .multiindex import MultiIndex, multiindex_at, rank_of
from .operad import (
    act,
    block_promote,
    compose_at,
    embed_promote,
    identity_permutation,
)
from .polynomial import Polynomial

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_EXAMPLES",
    "CanonicalChart",
    "ChainCheck",
    "ConstForm",
    "DoublingCheck",
    "EntropyReport",
    "HypothesisViolatedError",
    "MultiIndex",
    "NotClosedError",
    "PolyForm",
    "PolyMap",
    "Polynomial",
    "PresentationRecord",
    "ScaledForm",
    "VectorPolyForm",
    "VectorValuedForm",
    "ZeroComponentError",
    "act",
    "apply_linear_map",
    "block_promote",
    "build_embedding",
    "canonical_omega",
    "canonical_theta",
    "check_entropy_chain",
    "check_entropy_doubling",
    "compose_at",
    "constant_stack",
    "contract",
    "contraction_matrix",
    "cross3_example",
    "cross_product_form",
    "curve_samples",
    "direct_sum_form",
    "disorder_curve_value",
    "embed_promote",
    "entropy",
    "entropy_curve_value",
    "evaluate",
    "exterior_derivative",
    "exterior_derivative_vector",
    "identity_permutation",
    "is_nondegenerate",
    "iterated_cross_entropy",
    "iterated_cross_entropy_from_vectors",
    "joint_kernel",
    "multiindex_at",
    "normalize_for_chain",
    "omega_nondegenerate_at",
    "plectic6_example",
    "poincare_potential",
    "poincare_potential_vector",
    "pullback",
    "pullback_vector",
    "rank_of",
    "standard_symplectic",
    "verify_local_presentation",
    "wedge",
]
