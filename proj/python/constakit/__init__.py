"""Exact arithmetic for repeated-root constacyclic codes over F_{p^s}.

The heavy lifting lives in the compiled extension; this package re-exports
the public surface.
"""

from ._core import (
    Code,
    CodeEnumerator,
    CodeShape,
    Felt,
    Field,
    Poly,
    SelfDualEnumerator,
    bruteforce_dual_words,
    check_matrix_selfdual,
    check_shift_closure,
    classify_factors,
    codeword_set,
    consistency_report,
    count_codes,
    cyclic_equivalent,
    cyclotomic_cosets,
    dual,
    factor_binomial,
    factor_grid,
    factor_squarefree_monic,
    format_element,
    format_element_pow,
    format_poly,
    gcd,
    generator_matrix,
    is_self_dual,
    make_code,
    map_to_cyclic,
    min_distance,
    minimal_polynomial,
    multiplicative_order,
    nth_root_of,
    pretty_poly,
    prth_root,
    run_cli,
    selfdual_exists_paper,
    selfdual_exists_structural,
    shape_decompose,
)

__all__ = [
    "Code",
    "CodeEnumerator",
    "CodeShape",
    "Felt",
    "Field",
    "Poly",
    "SelfDualEnumerator",
    "bruteforce_dual_words",
    "check_matrix_selfdual",
    "check_shift_closure",
    "classify_factors",
    "codeword_set",
    "consistency_report",
    "count_codes",
    "cyclic_equivalent",
    "cyclotomic_cosets",
    "dual",
    "factor_binomial",
    "factor_grid",
    "factor_squarefree_monic",
    "format_element",
    "format_element_pow",
    "format_poly",
    "gcd",
    "generator_matrix",
    "is_self_dual",
    "make_code",
    "map_to_cyclic",
    "min_distance",
    "minimal_polynomial",
    "multiplicative_order",
    "nth_root_of",
    "pretty_poly",
    "prth_root",
    "run_cli",
    "selfdual_exists_paper",
    "selfdual_exists_structural",
    "shape_decompose",
]

__version__ = "0.1.0"
