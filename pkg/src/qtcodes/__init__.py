"""One-generator (1+u)-quasi-twisted codes over R = F2 + u*F2.

Build minimum generating sets for the A1, A2, B and SpecialA2 code
families, push codes through the Gray isometry to binary linear codes,
and verify every claim by exhaustive enumeration against an
independent oracle.
"""

__version__ = "0.1.0"

from .errors import (
    EmptySearchError,
    GuardError,
    PolyParseError,
    PreconditionError,
    QtError,
)
from .gf2poly import (
    NEG_INF,
    BinPoly,
    b_divmod,
    b_gcd,
    b_mul,
    parse,
    two_adic_split,
    xn_minus_1,
)
from .ring import (
    GrayWord,
    RingElem,
    RVec,
    SnElem,
    gray_map,
    lee_weight,
    parse_ring_poly,
    r_mul,
    sn_mul,
    sn_reduce,
)
from .construct import (
    CompanionCode,
    GeneratingSet,
    QtGenerator,
    SPAN_GUARD_LOG2,
    build_a1,
    build_a2,
    build_b,
    build_special_a2,
    card_log2,
    rho_pack,
    rho_unpack,
    span_enumerate,
    t_shift,
)
from .analysis import (
    BEST_KNOWN_BINARY_D,
    ClassifyReport,
    CodeSummary,
    classify_constacyclic,
    companion_bound,
    equals_oracle,
    generating_set_exact,
    gray_params,
    min_lee,
    min_lee_span,
    oracle_enum,
    oracle_params,
    qt_check,
    rank_check,
    residue_torsion,
    summarize,
)
from .search import SearchResult, SearchRow, SearchSpec, run_search

__all__ = [
    "BEST_KNOWN_BINARY_D",
    "BinPoly",
    "ClassifyReport",
    "CodeSummary",
    "CompanionCode",
    "EmptySearchError",
    "GeneratingSet",
    "GrayWord",
    "GuardError",
    "NEG_INF",
    "PolyParseError",
    "PreconditionError",
    "QtError",
    "QtGenerator",
    "RVec",
    "RingElem",
    "SPAN_GUARD_LOG2",
    "SearchResult",
    "SearchRow",
    "SearchSpec",
    "SnElem",
    "b_divmod",
    "b_gcd",
    "b_mul",
    "build_a1",
    "build_a2",
    "build_b",
    "build_special_a2",
    "card_log2",
    "classify_constacyclic",
    "companion_bound",
    "equals_oracle",
    "generating_set_exact",
    "gray_map",
    "gray_params",
    "lee_weight",
    "min_lee",
    "min_lee_span",
    "oracle_enum",
    "oracle_params",
    "parse",
    "parse_ring_poly",
    "qt_check",
    "r_mul",
    "rank_check",
    "residue_torsion",
    "rho_pack",
    "rho_unpack",
    "run_search",
    "sn_mul",
    "sn_reduce",
    "span_enumerate",
    "summarize",
    "t_shift",
    "two_adic_split",
    "xn_minus_1",
]
