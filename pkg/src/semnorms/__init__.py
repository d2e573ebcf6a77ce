"""Submultiplicative norms on finite semigroups, plus the exact
minor-based norm family on square rational matrices."""

from .axioms import AxiomReport, AxiomVerdict, classify_literature_axioms
from .catalog import (
    BUILTIN_SEMIGROUPS,
    builtin_semigroup,
    cyclic_group,
    full_transformation_monoid,
    left_zero_semigroup,
    null_semigroup,
    symmetric_group,
)
from .errors import (
    GeneratorExhaustedError,
    InvalidSemigroupError,
    NormConstructionError,
    NormDomainError,
    ParseError,
    SemnormsError,
)
from .green import GreenStructure, d_class_of, green_structure
from .matrices import (
    MinorNormCheck,
    MinorNormParams,
    RatMatrix,
    WitnessPoint,
    WitnessReport,
    cauchy_binet,
    check_minor_norm_submultiplicative,
    det,
    generalized_inverse,
    load_matrix,
    mat_mul,
    minor,
    minor_norm,
    minor_norm_float,
    parse_matrix_text,
    random_rational_matrix,
    rank,
    witness_sequence,
)
from .natural_order import OrderRelation, natural_leq, natural_order
from .norms import (
    DEFAULT_VALUE_POOL,
    NormBatch,
    NormTable,
    SubmultiplicativityVerdict,
    builtin_norm,
    check_submultiplicative,
    exp_approx,
    load_norm_table,
    parse_norm_text,
    random_submultiplicative_norms,
    submultiplicative_envelope,
    zero_set,
)
from .propositions import (
    FAIL,
    INAPPLICABLE,
    PASS,
    SUITE_IDS,
    PropositionVerdict,
    check_group_lower_bound,
    check_idempotent_norm_dichotomy,
    check_inverse_lower_bound,
    check_order_zero_downward,
    check_zero_element_bound,
    check_zero_set_closed,
    check_zero_spreads_over_d_class,
    run_suite,
    suite_to_jsonable,
)
from .semigroups import (
    FiniteSemigroup,
    ValidationReport,
    ZeroElements,
    adjoin_identity,
    idempotents,
    inverse_set,
    is_regular,
    load_cayley_table,
    parse_cayley_text,
    validate,
    zero_elements,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomVerdict",
    "BUILTIN_SEMIGROUPS",
    "DEFAULT_VALUE_POOL",
    "FAIL",
    "FiniteSemigroup",
    "GeneratorExhaustedError",
    "GreenStructure",
    "INAPPLICABLE",
    "InvalidSemigroupError",
    "MinorNormCheck",
    "MinorNormParams",
    "NormBatch",
    "NormConstructionError",
    "NormDomainError",
    "NormTable",
    "OrderRelation",
    "PASS",
    "ParseError",
    "PropositionVerdict",
    "RatMatrix",
    "SUITE_IDS",
    "SemnormsError",
    "SubmultiplicativityVerdict",
    "ValidationReport",
    "WitnessPoint",
    "WitnessReport",
    "ZeroElements",
    "adjoin_identity",
    "builtin_norm",
    "builtin_semigroup",
    "cauchy_binet",
    "check_group_lower_bound",
    "check_idempotent_norm_dichotomy",
    "check_inverse_lower_bound",
    "check_minor_norm_submultiplicative",
    "check_order_zero_downward",
    "check_submultiplicative",
    "check_zero_element_bound",
    "check_zero_set_closed",
    "check_zero_spreads_over_d_class",
    "classify_literature_axioms",
    "cyclic_group",
    "d_class_of",
    "det",
    "exp_approx",
    "full_transformation_monoid",
    "generalized_inverse",
    "green_structure",
    "idempotents",
    "inverse_set",
    "is_regular",
    "left_zero_semigroup",
    "load_cayley_table",
    "load_matrix",
    "load_norm_table",
    "mat_mul",
    "minor",
    "minor_norm",
    "minor_norm_float",
    "natural_leq",
    "natural_order",
    "null_semigroup",
    "parse_cayley_text",
    "parse_matrix_text",
    "parse_norm_text",
    "random_rational_matrix",
    "random_submultiplicative_norms",
    "rank",
    "run_suite",
    "submultiplicative_envelope",
    "suite_to_jsonable",
    "symmetric_group",
    "validate",
    "witness_sequence",
    "zero_elements",
    "zero_set",
]
