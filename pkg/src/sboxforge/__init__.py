"""Key-dependent clone s-box generation and algebraic property analysis."""

from .analysis import (
    AnalysisReport,
    BooleanFunctionTable,
    DependenceMatrix,
    PropertyStats,
    ReportComparison,
    WalshSpectrum,
    analyze,
    bic_nonlinearity_stats,
    bic_sac_stats,
    compare_reports,
    component_function,
    is_bijective_strict,
    max_balanced_nonlinearity,
    nonlinearity,
    sac_dependence_matrix,
    sac_stats,
    sbox_nonlinearity_stats,
    walsh_spectrum,
)
from .core import (
    BitPermutation,
    BooleanMatrix,
    CloneOptions,
    FixedPointReport,
    NonBijectiveError,
    RemovalExhausted,
    SBox,
    apply_column_permutation,
    bit_permute_value,
    clone_sbox,
    clone_sbox_avoiding_fixed_points,
    derive_row_permutation,
    find_fixed_points,
    from_boolean_matrix,
    to_boolean_matrix,
)
from .keys import key_to_permutations, lehmer_decode, lehmer_encode

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BitPermutation",
    "BooleanFunctionTable",
    "BooleanMatrix",
    "CloneOptions",
    "DependenceMatrix",
    "FixedPointReport",
    "NonBijectiveError",
    "PropertyStats",
    "RemovalExhausted",
    "ReportComparison",
    "SBox",
    "WalshSpectrum",
    "analyze",
    "apply_column_permutation",
    "bic_nonlinearity_stats",
    "bic_sac_stats",
    "bit_permute_value",
    "clone_sbox",
    "clone_sbox_avoiding_fixed_points",
    "compare_reports",
    "component_function",
    "derive_row_permutation",
    "find_fixed_points",
    "from_boolean_matrix",
    "is_bijective_strict",
    "key_to_permutations",
    "lehmer_decode",
    "lehmer_encode",
    "max_balanced_nonlinearity",
    "nonlinearity",
    "sac_dependence_matrix",
    "sac_stats",
    "sbox_nonlinearity_stats",
    "to_boolean_matrix",
    "walsh_spectrum",
]
