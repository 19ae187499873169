"""Exact symbolic arithmetic for definable hyperrationals and the
classical constructions built on them: nonstandard hulls, Loeb and
Lebesgue measures on a hyperfinite grid, external numbers, and an
exhaustive finite ultrapower oracle."""

from .germ import (
    OMEGA,
    BivariateGerm,
    Germ,
    GermClass,
    InfiniteShadow,
    NEG_INF,
    POS_INF,
    arith,
    classify,
    compare,
    diagonal,
    eventually_threshold,
    parse_family,
    parse_germ,
    parse_germ_in_k,
    shadow,
    valuation,
)

__version__ = "0.1.0"

__all__ = [
    "OMEGA",
    "BivariateGerm",
    "Germ",
    "GermClass",
    "InfiniteShadow",
    "NEG_INF",
    "POS_INF",
    "arith",
    "classify",
    "compare",
    "diagonal",
    "eventually_threshold",
    "parse_family",
    "parse_germ",
    "parse_germ_in_k",
    "shadow",
    "valuation",
    "__version__",
]
