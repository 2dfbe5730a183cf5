"""Numeric polynomial roots with multiplicities."""
from __future__ import annotations

import numpy as np

from .. import kernels
from .poly import Polynomial, poly_gcd

__all__ = ["RootFindingError", "poly_roots", "squarefree_factors"]


class RootFindingError(ArithmeticError):
    """Raised when the root iteration does not converge."""


def squarefree_factors(f: Polynomial):
    """Yun's square-free decomposition: ``[(factor, multiplicity), ...]`` with
    monic, pairwise coprime, square-free factors."""
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree >= 1:
            out.append((a, i))
        i += 1
    return out


def _simple_roots(c):
    """Roots of a square-free monic polynomial with ascending coefficients."""
    if len(c) == 2:
        return [complex(-c[0] / c[1])]
    z, ok, _ = kernels.aberth(c)
    if not ok:
        raise RootFindingError(f"Aberth iteration did not converge for degree {len(c) - 1}")
    return [complex(r) for r in z]


def poly_roots(f: Polynomial, tol: float = 1e-12):
    """Roots of ``f`` as ``[(root, multiplicity), ...]``.

    Multiplicities come from an exact square-free decomposition, so the
    Aberth-Ehrlich iteration only ever sees simple roots.  Every root must
    satisfy
    ``|f(r)| <= tol * sum_k |f_k| |r|^k`` for the monic normalization.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("poly_roots needs degree >= 1")
    full = f.to_array() / f.to_array()[-1]
    out = []
    for factor, mult in squarefree_factors(f):
        out.extend((r, mult) for r in _simple_roots(factor.to_array()))
    rev, absrev = full[::-1], np.abs(full)[::-1]
    for r, _mult in out:
        resid = abs(np.polyval(rev, r))
        if resid > tol * max(np.polyval(absrev, abs(r)), 1.0):
            raise RootFindingError(f"root {r} has residual {resid:.3g}")
    return out
