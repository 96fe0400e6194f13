"""Exact polynomial and rational-function arithmetic, root isolation, series."""

from .numeric import DEFAULT_TOL, NonConvergenceError, NumericRoot, all_roots_numeric
from .poly import (
    ONE,
    T,
    T_MINUS_ONE,
    InexactDivisionError,
    IntPolynomial,
    bracket,
    bracket_product,
    divides,
    exact_divide,
    exact_divide_rational_primitive,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
)
from .ratfun import RationalFunction, ratfun_sum
from .roots import (
    DEFAULT_WIDTH,
    NoPositiveRootError,
    RootInterval,
    count_roots,
    isolate_smallest_positive_root,
    refine,
    sturm_chain,
)
from .series import series_coefficients

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_WIDTH",
    "ONE",
    "T",
    "T_MINUS_ONE",
    "InexactDivisionError",
    "IntPolynomial",
    "NoPositiveRootError",
    "NonConvergenceError",
    "NumericRoot",
    "RationalFunction",
    "RootInterval",
    "all_roots_numeric",
    "bracket",
    "bracket_product",
    "count_roots",
    "divides",
    "exact_divide",
    "exact_divide_rational_primitive",
    "isolate_smallest_positive_root",
    "poly_gcd",
    "ratfun_sum",
    "refine",
    "series_coefficients",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_chain",
]
