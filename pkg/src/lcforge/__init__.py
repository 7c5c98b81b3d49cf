"""Linear complexity and k-error linear complexity of 2^n-periodic binary sequences."""

from .core import (
    MAX_EXPONENT,
    PeriodicSequence,
    add,
    games_chan_lc,
    halve,
    hamming_weight,
    lc_by_minimal_polynomial,
    lc_pair,
    lc_quad,
    lc_table,
    parse_binary,
    parse_hex,
    parse_sequence,
)
from .counting import (
    LDecomposition,
    LKind,
    LSubcase,
    decompose_L,
    f_term,
    g_term,
    kavuluru_table1,
    n1_lcfull,
    n2_lcfull,
    n2_lcless,
    n2_total,
    n3_lcfull,
    n3_lcless,
    n3_total,
    n4_lcfull,
    rueppel_count,
)
from .kerror import (
    SEARCH_BUDGET,
    ErrorPattern,
    KErrorResult,
    k_error_lc,
    k_error_profile,
    k_min_formula,
    k_min_search,
)
from .census import (
    CensusQuery,
    CensusReport,
    CensusRow,
    Exhaustive,
    RefutationReport,
    RefutationRow,
    Sampled,
    SequenceClass,
    census_distribution,
    class_size,
    formula_counts,
    interval_covers,
    proportion_interval,
    refutation_report,
    verify_formulas,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_EXPONENT",
    "SEARCH_BUDGET",
    "CensusQuery",
    "CensusReport",
    "CensusRow",
    "ErrorPattern",
    "Exhaustive",
    "KErrorResult",
    "LDecomposition",
    "LKind",
    "LSubcase",
    "PeriodicSequence",
    "RefutationReport",
    "RefutationRow",
    "Sampled",
    "SequenceClass",
    "add",
    "census_distribution",
    "class_size",
    "decompose_L",
    "f_term",
    "formula_counts",
    "g_term",
    "games_chan_lc",
    "halve",
    "hamming_weight",
    "interval_covers",
    "k_error_lc",
    "k_error_profile",
    "k_min_formula",
    "k_min_search",
    "kavuluru_table1",
    "lc_by_minimal_polynomial",
    "lc_pair",
    "lc_quad",
    "lc_table",
    "n1_lcfull",
    "n2_lcfull",
    "n2_lcless",
    "n2_total",
    "n3_lcfull",
    "n3_lcless",
    "n3_total",
    "n4_lcfull",
    "parse_binary",
    "parse_hex",
    "parse_sequence",
    "proportion_interval",
    "refutation_report",
    "rueppel_count",
    "verify_formulas",
]
