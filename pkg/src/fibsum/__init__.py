"""Exact and certified tooling for sums of consecutive k-step Fibonacci terms.

Library layout:

- sequences: exact integer sequence arithmetic and Fibonacci membership
- intpoly:   integer polynomials, resultants, valuations, minimal polynomials
- balls:     midpoint-radius arithmetic with explicit precision and radius
- roots:     certified root enclosures, Binet evaluation, logarithmic heights
- bounds:    linear-forms-in-logarithms constants and effective thresholds
- search:    exhaustive desk-scale solution enumeration and verification
- cli:       command-line front end with JSON/CSV reports and figures
"""

from .balls import ComplexBall, PrecisionError, RealBall
from .bounds import (
    BoundReport,
    Gamma,
    LinearFormSpec,
    derive_bounds,
    matveev_A,
    matveev_C,
    matveev_lambda,
    matveev_lower_bound,
    nonvanishing_witness,
    threshold_search,
    window_coefficient,
    window_coefficient_minpoly,
)
from .example_repro import reproduce_example_3_4
from .intpoly import (
    IntPolynomial,
    IrreducibilityInconclusive,
    char_poly,
    delta_closed_form,
    delta_recursion,
    minpoly_of_quotient,
    mod25_flagged,
    mod25_scan,
    norm_linear_resultant,
    padic_val,
    periodicity_check,
    resultant,
)
from .roots import RootSet, all_roots, binet_eval, binet_int, dominant_root, weil_height
from .search import (
    GrowthReport,
    K2Report,
    SearchReport,
    Solution,
    bound_consistency,
    find_solutions,
    intersection_scan,
    verify_growth,
    verify_prop_k2,
)
from .sequences import (
    fib_index_of,
    fibonacci,
    k2_window_closed_form,
    kbonacci,
    window_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ComplexBall",
    "Gamma",
    "GrowthReport",
    "IntPolynomial",
    "IrreducibilityInconclusive",
    "K2Report",
    "LinearFormSpec",
    "PrecisionError",
    "RealBall",
    "RootSet",
    "SearchReport",
    "Solution",
    "all_roots",
    "binet_eval",
    "binet_int",
    "bound_consistency",
    "char_poly",
    "delta_closed_form",
    "delta_recursion",
    "derive_bounds",
    "dominant_root",
    "fib_index_of",
    "fibonacci",
    "find_solutions",
    "intersection_scan",
    "k2_window_closed_form",
    "kbonacci",
    "matveev_A",
    "matveev_C",
    "matveev_lambda",
    "matveev_lower_bound",
    "minpoly_of_quotient",
    "mod25_flagged",
    "mod25_scan",
    "nonvanishing_witness",
    "norm_linear_resultant",
    "padic_val",
    "periodicity_check",
    "reproduce_example_3_4",
    "resultant",
    "threshold_search",
    "verify_growth",
    "verify_prop_k2",
    "weil_height",
    "window_coefficient",
    "window_coefficient_minpoly",
    "window_sum",
]
