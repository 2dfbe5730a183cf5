"""Exact Gaussian-rational arithmetic, polynomials and polynomial resultants."""
from .poly import NEG_INF, BivariatePolynomial, Polynomial, interpolate, interpolate_bivariate, poly_gcd
from .rational import ComplexRational, as_cq, det_exact, inverse_exact, solve_exact
from .resultants import (
    bezout_resultant,
    discriminant_pol,
    pencil_resultant,
    poisson_resultant,
    reciprocal_poly,
    sylvester_matrix,
    sylvester_resultant,
    taylor_coeffs,
    toeplitz_resultant,
)
from .roots import RootFindingError, poly_roots, squarefree_factors


def poly_arith(a: Polynomial, b: Polynomial, kind: str):
    """Dispatch ``add``, ``sub``, ``mul``, ``divrem`` or ``gcd``."""
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "divrem": lambda: a.divrem(b),
        "gcd": lambda: poly_gcd(a, b),
    }
    try:
        return ops[kind]()
    except KeyError:
        raise ValueError(f"unknown polynomial operation {kind!r}") from None


__all__ = [
    "NEG_INF",
    "BivariatePolynomial",
    "ComplexRational",
    "Polynomial",
    "RootFindingError",
    "as_cq",
    "bezout_resultant",
    "det_exact",
    "discriminant_pol",
    "interpolate",
    "interpolate_bivariate",
    "inverse_exact",
    "pencil_resultant",
    "poisson_resultant",
    "poly_arith",
    "poly_gcd",
    "poly_roots",
    "reciprocal_poly",
    "solve_exact",
    "squarefree_factors",
    "sylvester_matrix",
    "sylvester_resultant",
    "taylor_coeffs",
    "toeplitz_resultant",
]
