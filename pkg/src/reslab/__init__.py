"""Resultants of meromorphic functions, elimination, Toeplitz determinants
and exponential transforms, with exact and numeric routes side by side."""
from .core import BivariatePolynomial, ComplexRational, Polynomial, as_cq
from .divisors import (
    INFINITE,
    INFINITY,
    ZERO,
    Admissibility,
    Divisor,
    RationalFunction,
    divisor_of,
    is_admissible,
    local_symbol,
)
from .elimination import EliminationFunction, elimination_function, extended_elimination
from .resultant import (
    NotAdmissibleError,
    cross_ratio,
    mero_discriminant,
    mutual_energy,
    reduced_resultant,
    res_cross_ratio,
    res_divisor,
    res_four_poly,
    res_pol,
    weil_product,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "ComplexRational",
    "Polynomial",
    "as_cq",
    "INFINITE",
    "INFINITY",
    "ZERO",
    "Admissibility",
    "Divisor",
    "RationalFunction",
    "divisor_of",
    "is_admissible",
    "local_symbol",
    "EliminationFunction",
    "elimination_function",
    "extended_elimination",
    "NotAdmissibleError",
    "cross_ratio",
    "mero_discriminant",
    "mutual_energy",
    "reduced_resultant",
    "res_cross_ratio",
    "res_divisor",
    "res_four_poly",
    "res_pol",
    "weil_product",
]
