"""Allowed patterns and shift-complexity of negative beta-shifts."""

from .complexity import (
    b_bar,
    char_polynomial,
    characteristic_polynomial,
    construct,
    construction_word,
    witness_candidates,
    witness_suffix,
    witness_word,
)
from .kernels import BACKEND
from .oracle import (
    BudgetExceeded,
    PatternSet,
    allowed_patterns_integer,
    allowed_patterns_real,
    minus_beta_digits,
    nbar_bruteforce,
    verify_witness,
)
from .perm import (
    Permutation,
    PermutationError,
    ascents,
    cornered_kind,
    hat,
    parse_permutation,
    special_indices,
)
from .polynomial import AlgebraicValue, IntPolynomial, largest_root_geq, parse_polynomial
from .segment import (
    classify,
    enumerate_segmentations,
    is_segmentation,
    is_valid_prefix,
    nbar,
    prefix_of,
    valid_prefixes,
)
from .word import EPWord, TailedWord, alt_compare, exceeds_u, f_value, max_shift, normalize, parse_word, shift

__version__ = "0.1.0"

__all__ = [
    "AlgebraicValue",
    "allowed_patterns_integer",
    "allowed_patterns_real",
    "alt_compare",
    "ascents",
    "b_bar",
    "BACKEND",
    "BudgetExceeded",
    "char_polynomial",
    "characteristic_polynomial",
    "classify",
    "construct",
    "construction_word",
    "cornered_kind",
    "enumerate_segmentations",
    "EPWord",
    "exceeds_u",
    "f_value",
    "hat",
    "IntPolynomial",
    "is_segmentation",
    "is_valid_prefix",
    "largest_root_geq",
    "max_shift",
    "minus_beta_digits",
    "nbar",
    "nbar_bruteforce",
    "normalize",
    "parse_permutation",
    "parse_polynomial",
    "parse_word",
    "PatternSet",
    "Permutation",
    "PermutationError",
    "prefix_of",
    "shift",
    "special_indices",
    "TailedWord",
    "valid_prefixes",
    "verify_witness",
    "witness_candidates",
    "witness_suffix",
    "witness_word",
]
