"""Exact-arithmetic toolkit for multilinear matrix polynomials.

Everything here works over explicit exact fields (GF(p), GF(p^k), Q,
Q(i)): evaluating homogeneous multilinear polynomials on matrix
tuples, computing the one-sided and two-sided annihilator spaces of a
coefficient matrix, classifying those spaces, putting matrices into
companion, rational, and Jordan canonical form, and verifying whether
a candidate map on matrices preserves polynomial zeros.
"""

__version__ = "0.1.0"

from .fields import (
    GF,
    QQ,
    QI,
    CONJUGATION,
    IDENTITY_HOM,
    FieldHom,
    apply_hom,
    enumerate_homs,
    field_make,
    field_of_order,
    hom_make,
)
from .unipoly import BudgetError, factor_poly, splitting_field
from .matrices import (
    char_poly,
    enumerate_matrices,
    min_poly,
    null_space,
    random_matrix,
    rank,
    solve,
)
from .multipoly import (
    MultilinearPoly,
    evaluate,
    normalize,
    standard_polynomial,
    validate_admissible,
)
from .operators import (
    ElementaryOperator,
    annihilator_dims,
    anticommutant,
    joint_kernel,
    operator_kernel,
    pivot_kernel,
    slot1_kernel,
    spectrum_single_eigenvalue,
)
from .canonical import companion, jordan_over_splitting_field, primary_rational_form
from .classify import (
    CASE_LINE,
    CASE_OTHER,
    CASE_SQUARE_ZERO,
    CASE_TRIVIAL,
    Classification,
    classify_direct,
    classify_structural,
    cross_validate,
)
from .preservers import (
    EXAMPLE_IDS,
    PreserverSpec,
    Verdict,
    check_commutativity_preservation,
    check_maps_zeros,
    check_rank_one_idempotent_structure,
    check_zero_kernel,
    reproduce_example,
    rescale_to_idempotent_preserving,
)
from .oracles import (
    LemmaReport,
    check_spectrum_formula,
    commuting_pair_count,
    enumerate_zero_set,
    local_linear_dependence,
    verify_affine_span,
    verify_nilpotent_proportionality,
    verify_orthogonality,
    verify_zero_detection,
)
from .io import canonical_dumps, named_poly, poly_from_json, poly_to_json

__all__ = [
    "BudgetError",
    "CASE_LINE",
    "CASE_OTHER",
    "CASE_SQUARE_ZERO",
    "CASE_TRIVIAL",
    "CONJUGATION",
    "Classification",
    "ElementaryOperator",
    "EXAMPLE_IDS",
    "FieldHom",
    "GF",
    "IDENTITY_HOM",
    "LemmaReport",
    "MultilinearPoly",
    "PreserverSpec",
    "QI",
    "QQ",
    "Verdict",
    "annihilator_dims",
    "anticommutant",
    "apply_hom",
    "canonical_dumps",
    "char_poly",
    "check_commutativity_preservation",
    "check_maps_zeros",
    "check_rank_one_idempotent_structure",
    "check_spectrum_formula",
    "check_zero_kernel",
    "classify_direct",
    "classify_structural",
    "commuting_pair_count",
    "companion",
    "cross_validate",
    "enumerate_homs",
    "enumerate_matrices",
    "enumerate_zero_set",
    "evaluate",
    "factor_poly",
    "field_make",
    "field_of_order",
    "hom_make",
    "joint_kernel",
    "jordan_over_splitting_field",
    "local_linear_dependence",
    "min_poly",
    "named_poly",
    "normalize",
    "null_space",
    "operator_kernel",
    "pivot_kernel",
    "poly_from_json",
    "poly_to_json",
    "primary_rational_form",
    "random_matrix",
    "rank",
    "reproduce_example",
    "rescale_to_idempotent_preserving",
    "slot1_kernel",
    "solve",
    "spectrum_single_eigenvalue",
    "splitting_field",
    "standard_polynomial",
    "validate_admissible",
    "verify_affine_span",
    "verify_nilpotent_proportionality",
    "verify_orthogonality",
    "verify_zero_detection",
]
