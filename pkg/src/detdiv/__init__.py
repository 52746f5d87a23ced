"""Exact determinantal divisors, Smith normal forms, and product
realizability over Z and Z[sqrt(-5)]."""

from .matrices import (
    DimensionCapError,
    DimensionMismatchError,
    DivisorChain,
    Matrix,
    column_class,
    compound,
    det,
    det_divisor,
    divisor_chain,
    elem_divisor,
    rank,
    subset_enumeration,
)
from .oracle import (
    ScanConfig,
    ScanReport,
    cross_check_checker,
    enumerate_realized_triples,
    verify_bound_theorems,
)
from .realizability import (
    NOT_REALIZABLE,
    REALIZABLE,
    UNKNOWN,
    InvalidChainError,
    SearchExhaustedError,
    Triple,
    UnsupportedConstructionError,
    Verdict,
    check_chain,
    check_triple,
    construct_from_elementary,
    realize_n2,
    realize_product_equal,
)
from .rings import (
    RINGS,
    Z,
    ZSQRT5,
    FracIdeal,
    Ideal,
    IdealClass,
    RingElem,
    RingMismatchError,
    ideal_class,
    ideal_from_generators,
    ideal_quotient_exact,
    is_principal,
)
from .smith import (
    BlockLemmaReport,
    BlockNormalForm,
    SingularMatrixError,
    SmithDecomposition,
    block_diagonal,
    block_normal_form,
    equivalent,
    is_unimodular,
    smith_normal_form,
    transform_certificate,
    verify_block_lemma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
