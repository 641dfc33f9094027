from .operators import (
    DEFAULT_SPAN_DEG,
    OperatorSpace,
    T,
    X,
    all_reduced_words,
    apply_word,
    far_commutation_check,
    longest_element,
    operators_equal,
    reduced_word,
    reduced_word_independence,
    relation_table,
    staircase_idempotent_check,
    sym2_checks,
    t_w,
    telescoping_identity_check,
    w0_degree_check,
    w0_kills_pair_symmetric,
)
from .poly import MultiPoly, demazure, monomial_symmetric, monomials_up_to, staircase

__all__ = [
    "DEFAULT_SPAN_DEG", "MultiPoly", "OperatorSpace", "T", "X", "all_reduced_words",
    "apply_word", "demazure", "far_commutation_check", "longest_element",
    "monomial_symmetric", "monomials_up_to", "operators_equal", "reduced_word",
    "reduced_word_independence", "relation_table", "staircase", "staircase_idempotent_check",
    "sym2_checks", "t_w", "telescoping_identity_check", "w0_degree_check",
    "w0_kills_pair_symmetric",
]
