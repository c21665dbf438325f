"""Additive codes over the mixed alphabet Z2 x Z4 x Z8.

Construction and normalization of generator matrices, duality, Gray maps,
exhaustive enumeration oracles, and cyclic codes built from generator
polynomials.
"""

from mixedcode.core import (
    AlphabetSplit,
    BudgetError,
    MixedVector,
    ParseError,
    SplitMismatchError,
    add,
    format_vector,
    gray_map,
    gray_phi1,
    gray_phi2,
    hamming_weight,
    inner_product,
    parse_vector,
    scalar_mul,
)
from mixedcode.matrices import (
    CodeType,
    ColumnPermutation,
    DualConstructionError,
    MixedMatrix,
    StandardFormBlocks,
    cardinality,
    dual_matrix,
    dual_type,
    extract_type,
    first_violation,
    format_matrix,
    is_member,
    load_matrix,
    parse_matrix,
    reduce_vector,
    standard_form,
    verify_orthogonality,
)
from mixedcode.enumeration import (
    CodewordSet,
    DistanceResult,
    EnumerationBudget,
    brute_force_dual,
    check_subgroup,
    closure_from_rows,
    enumerate_codewords,
    gray_image,
    gray_rows,
    min_gray_distance,
    subgroup_witness,
)
from mixedcode.cyclic import (
    ConditionError,
    CyclicGenerators,
    DerivedCofactors,
    IndeterminateDivisionError,
    PolyTriple,
    ResiduePoly,
    SpanningSet,
    ValidationReport,
    check_cyclic_closure,
    compute_k,
    cyclic_closure_witness,
    cyclic_shift,
    cyclic_size,
    derive_cofactors,
    format_generators,
    from_vector,
    load_generators,
    normalize_generators,
    parse_generators,
    poly_divides,
    poly_divmod,
    poly_mul_mod,
    spanning_set,
    star_mul,
    to_vector,
    validate_generators,
)

__version__ = "0.1.0"
