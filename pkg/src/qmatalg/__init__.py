"""Exact symbolic computation in quantum matrix superalgebras.

Everything is computed over Z[q, q^-1] with arbitrary-precision integer
coefficients; there is no floating point anywhere and no tolerance other
than exact equality.
"""

__version__ = "0.1.0"

from .laurent import (
    ExactDivisionError,
    LaurentInt,
    format_laurent,
    lau_add,
    lau_bar,
    lau_div_exact,
    lau_eval_q1,
    lau_mul,
    parse_laurent,
)
from .exactla import CoeffMatrix, CoeffVector, column_span_dim, nullspace, rank
from .hookcomb import (
    contains_rectangle,
    emit_dimension_table,
    enumerate_hook_partitions,
    hook_tableaux_dim,
    howe_dim_sum,
    kernel_dim_prediction,
    supermatrix_monomial_count,
)
from .qalgebra import (
    AlgebraPresentation,
    GenIndex,
    NCElement,
    element_to_vector,
    format_element,
    graded_basis,
    multiply,
    normal_form,
    normal_form_stats,
    parse_element,
    presentation_M,
    presentation_Mbar,
    presentation_Mtilde,
    presentation_P,
    verify_presentation_flatness,
)
from .uqaction import (
    act,
    act_on_generator,
    chevalley_generators,
    hopf_data,
    invariant_subspace,
    is_invariant,
    pi_antipode_matrix,
    pi_matrix,
    verify_operator_relations,
)
from .invariants import (
    InvariantParams,
    build_X,
    classical_limit,
    classical_presentation,
    fft_check,
    ideal_degree_component,
    kernel_psi_basis,
    psi,
    quantum_minor,
    sergeev_polynomial,
    symmetric_group_action,
    verify_X_relations,
)
from .rmat_hecke import (
    hecke_act,
    r_inverse_matrix,
    r_matrix,
    rcheck_operator,
    sym_skew_bases,
    tensor_index,
    verify_braid,
    verify_frt,
    verify_hecke_quadratic,
)

__all__ = [
    "__version__",
    "ExactDivisionError",
    "LaurentInt",
    "format_laurent",
    "lau_add",
    "lau_bar",
    "lau_div_exact",
    "lau_eval_q1",
    "lau_mul",
    "parse_laurent",
    "CoeffMatrix",
    "CoeffVector",
    "column_span_dim",
    "nullspace",
    "rank",
    "contains_rectangle",
    "emit_dimension_table",
    "enumerate_hook_partitions",
    "hook_tableaux_dim",
    "howe_dim_sum",
    "kernel_dim_prediction",
    "supermatrix_monomial_count",
    "AlgebraPresentation",
    "GenIndex",
    "NCElement",
    "element_to_vector",
    "format_element",
    "graded_basis",
    "multiply",
    "normal_form",
    "normal_form_stats",
    "parse_element",
    "presentation_M",
    "presentation_Mbar",
    "presentation_Mtilde",
    "presentation_P",
    "verify_presentation_flatness",
    "act",
    "act_on_generator",
    "chevalley_generators",
    "hopf_data",
    "invariant_subspace",
    "is_invariant",
    "pi_antipode_matrix",
    "pi_matrix",
    "verify_operator_relations",
    "InvariantParams",
    "build_X",
    "classical_limit",
    "classical_presentation",
    "fft_check",
    "ideal_degree_component",
    "kernel_psi_basis",
    "psi",
    "quantum_minor",
    "sergeev_polynomial",
    "symmetric_group_action",
    "verify_X_relations",
    "hecke_act",
    "r_inverse_matrix",
    "r_matrix",
    "rcheck_operator",
    "sym_skew_bases",
    "tensor_index",
    "verify_braid",
    "verify_frt",
    "verify_hecke_quadratic",
]
