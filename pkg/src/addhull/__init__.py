"""Additive codes over F_{p^e} under character-table dualities.

The package computes with F_p-linear codes whose orthogonality comes
from an arbitrary duality (an isomorphism of the additive group with
its character group): hulls and duals, duality classification and
self-orthogonal counting, constructions of ACD and one-rank hull codes,
and exhaustive or randomized searches for the best one-rank distances.
"""

from .code import DEFAULT_CODEWORD_BUDGET, AdditiveCode, HullReport
from .constructions import (
    acd_from_self_orthogonal,
    find_non_self_orthogonal_element,
    find_nonzero_self_orthogonal_element,
    onerank_from_acd_add_row,
    onerank_from_acd_extend,
    onerank_from_self_orthogonal,
    repetition_code,
    validate_skew_tridiagonal,
)
from .duality import (
    DEFAULT_ELEMENT_BUDGET,
    Duality,
    DualityClass,
    GFElement,
    PrimePowerParams,
    decode_element,
    elements,
    encode_element,
    enumerate_dualities,
)
from .errors import (
    BudgetError,
    EvenCharacteristicError,
    HypothesisError,
    ParameterError,
    ParseError,
)
from .fileio import (
    DependentRowsWarning,
    parse_code,
    parse_duality,
    serialize_code,
    serialize_duality,
)
from .fixtures import CATALOG, Fixture, fixture, fixture_names, load_code, load_duality
from .fplinalg import FpMatrix, diagonalize_symmetric, legendre, nullspace, rank, rref
from .search import (
    DEFAULT_ITERATIONS,
    DEFAULT_SUBSPACE_BUDGET,
    F4_NONSYMMETRIC_D1,
    F4_NONSYMMETRIC_D1_STARRED,
    NO_ONE_RANK_CODE,
    SearchResult,
    SearchSpec,
    TableCell,
    TableReport,
    d1_search,
    d1_theoretical,
    enumerate_subspaces,
    gaussian_binomial,
    singleton_bound,
    table_report,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "BudgetError",
    "EvenCharacteristicError",
    "HypothesisError",
    "ParameterError",
    "ParseError",
    # prime-field linear algebra
    "FpMatrix",
    "diagonalize_symmetric",
    "legendre",
    "nullspace",
    "rank",
    "rref",
    # dualities
    "DEFAULT_ELEMENT_BUDGET",
    "Duality",
    "DualityClass",
    "GFElement",
    "PrimePowerParams",
    "decode_element",
    "elements",
    "encode_element",
    "enumerate_dualities",
    # codes
    "DEFAULT_CODEWORD_BUDGET",
    "AdditiveCode",
    "HullReport",
    # constructions
    "acd_from_self_orthogonal",
    "find_non_self_orthogonal_element",
    "find_nonzero_self_orthogonal_element",
    "onerank_from_acd_add_row",
    "onerank_from_acd_extend",
    "onerank_from_self_orthogonal",
    "repetition_code",
    "validate_skew_tridiagonal",
    # search
    "DEFAULT_ITERATIONS",
    "DEFAULT_SUBSPACE_BUDGET",
    "F4_NONSYMMETRIC_D1",
    "F4_NONSYMMETRIC_D1_STARRED",
    "NO_ONE_RANK_CODE",
    "SearchResult",
    "SearchSpec",
    "TableCell",
    "TableReport",
    "d1_search",
    "d1_theoretical",
    "enumerate_subspaces",
    "gaussian_binomial",
    "singleton_bound",
    "table_report",
    # file formats and fixtures
    "DependentRowsWarning",
    "parse_code",
    "parse_duality",
    "serialize_code",
    "serialize_duality",
    "CATALOG",
    "Fixture",
    "fixture",
    "fixture_names",
    "load_code",
    "load_duality",
]
