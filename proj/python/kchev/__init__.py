"""Exact Chevalley expansions in equivariant K-theory of flag varieties.

The compiled core does all the arithmetic; weights are tuples of integers in
fundamental-weight coordinates and words are tuples of 1-based simple-root
indices, matching the command-line tool.
"""

from ._kchev import (
    CellProductReport,
    GroupAlgebraElem,
    LocalizationReport,
    PositivityReport,
    RootSystem,
    WeylElem,
    WordIndependenceReport,
    all_elements,
    bruhat_leq,
    check_positivity,
    chevalley_expand,
    chevalley_ordinary,
    chevalley_table,
    demazure,
    demazure_product,
    demazure_t0,
    demazure_t1,
    ev,
    identity,
    is_dominant,
    is_reduced,
    line_bundle_expansion,
    longest_element,
    reduced_words,
    simple_reflection,
    verify_cell_product,
    verify_localization,
    verify_word_independence,
    weyl_act,
    weyl_element,
    __version__,
)

__all__ = [
    "CellProductReport",
    "GroupAlgebraElem",
    "LocalizationReport",
    "PositivityReport",
    "RootSystem",
    "WeylElem",
    "WordIndependenceReport",
    "all_elements",
    "bruhat_leq",
    "check_positivity",
    "chevalley_expand",
    "chevalley_ordinary",
    "chevalley_table",
    "demazure",
    "demazure_product",
    "demazure_t0",
    "demazure_t1",
    "ev",
    "identity",
    "is_dominant",
    "is_reduced",
    "line_bundle_expansion",
    "longest_element",
    "reduced_words",
    "simple_reflection",
    "verify_cell_product",
    "verify_localization",
    "verify_word_independence",
    "weyl_act",
    "weyl_element",
    "__version__",
]
