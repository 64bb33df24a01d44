"""Verified construction of the 11-dimensional GF(2) representation of M23.

The toolkit builds GF(2^11), locates the order-23 multiplicative subgroup C,
extends permutations of C to GF(2)-linear maps (or produces a concrete
counterexample), and machine-checks every table, matrix and claim of the
reference construction: the linear extension of g, the multiplication
matrix for f, the group order 10,200,960 computed two independent ways,
irreducibility, minimality of the dimension, the beta search, and the
negative results for the transposition and the 24-point permutation.
"""

from .bitmatrix import (
    BitMatrix,
    ClosureResult,
    bfs_closure,
    element_order,
    identity,
    mat_inverse,
    mat_mul,
    mat_vec,
    min_faithful_dimension,
    preserves_set,
    rank,
    spin,
    transpose,
)
from .extension import (
    BetaVerdict,
    ExtensionCandidate,
    ExtensionReport,
    FailureWitness,
    M24Verdict,
    extend,
    m24_test,
    matrix_in_chi,
    multiplication_matrix,
    preserves_c,
    restriction_to_c,
    search_beta,
)
from .field import (
    DEFAULT_FIELD,
    DEFAULT_MODULUS,
    FieldElement,
    FieldSpec,
    LogTable,
    build_log_table,
    irreducibility_witness,
    parse_binary_string,
    parse_polynomial,
    polynomial_string,
    to_binary_string,
    verify_primitive,
)
from .perm import (
    Permutation,
    StrongGeneratingData,
    full_cycle,
    group_order,
    orbit,
    parse_cycles,
    schreier_sims,
)
from .reports import (
    TABLE_IDS,
    DiffReport,
    Mismatch,
    diff_against_reference,
    emit_table,
    generator_matrices,
    parse_table,
    standard_permutations,
    verification_report,
    write_report_files,
)
from .subgroup import (
    DEFAULT_SUBGROUP,
    CoordVector,
    OrderedBasis,
    SubgroupSpec,
    alpha_power,
    alpha_to_beta,
    basis_a,
    basis_chi,
    beta_power,
    beta_to_alpha,
    c_elements,
    change_of_basis,
    check_independence,
    dlog_alpha,
    dlog_beta,
    doubling_orbit,
    express_in_basis,
    expression_string,
    in_c,
    normalize_exponent,
    parse_expression,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "BetaVerdict",
    "BitMatrix",
    "ClosureResult",
    "CoordVector",
    "DEFAULT_FIELD",
    "DEFAULT_MODULUS",
    "DEFAULT_SUBGROUP",
    "DiffReport",
    "ExtensionCandidate",
    "ExtensionReport",
    "FailureWitness",
    "FieldElement",
    "FieldSpec",
    "LogTable",
    "M24Verdict",
    "Mismatch",
    "OrderedBasis",
    "Permutation",
    "StrongGeneratingData",
    "SubgroupSpec",
    "TABLE_IDS",
    "alpha_power",
    "alpha_to_beta",
    "basis_a",
    "basis_chi",
    "beta_power",
    "beta_to_alpha",
    "bfs_closure",
    "build_log_table",
    "c_elements",
    "change_of_basis",
    "check_independence",
    "diff_against_reference",
    "dlog_alpha",
    "dlog_beta",
    "doubling_orbit",
    "element_order",
    "emit_table",
    "express_in_basis",
    "expression_string",
    "extend",
    "full_cycle",
    "generator_matrices",
    "group_order",
    "identity",
    "in_c",
    "irreducibility_witness",
    "m24_test",
    "mat_inverse",
    "mat_mul",
    "mat_vec",
    "matrix_in_chi",
    "min_faithful_dimension",
    "multiplication_matrix",
    "normalize_exponent",
    "orbit",
    "parse_binary_string",
    "parse_cycles",
    "parse_expression",
    "parse_polynomial",
    "parse_table",
    "polynomial_string",
    "preserves_c",
    "preserves_set",
    "rank",
    "reconstruct",
    "restriction_to_c",
    "schreier_sims",
    "search_beta",
    "spin",
    "standard_permutations",
    "to_binary_string",
    "transpose",
    "verification_report",
    "verify_primitive",
    "write_report_files",
]
