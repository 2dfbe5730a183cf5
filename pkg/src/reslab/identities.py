"""Resultant identities over splittings h = h_IJ * h_{I'J'}.

For ``h(z) = prod (z - a_i)/(z - b_i)`` and index sets ``I, J`` of equal
size, ``h_IJ = prod_{i in I} (z - a_i) / prod_{j in J} (z - b_j)``.  Index
sets are 1-based and enumerated in colexicographic order.
"""
from __future__ import annotations

import cmath
import math
from itertools import combinations

from .core import ComplexRational, as_cq, det_exact, inverse_exact
from .divisors import RationalFunction
from .resultant import res_cross_ratio, res_divisor

__all__ = [
    "subsets",
    "complement",
    "splitting_resultant",
    "sum_identity",
    "sum_terms",
    "vandermonde_lambda",
    "minor_route",
    "minor_route_signed",
    "trig_identity_check",
]


def subsets(d: int, m: int):
    """All increasing ``m``-subsets of ``{1..d}`` in colex order."""
    return sorted(combinations(range(1, d + 1), m), key=lambda s: tuple(reversed(s)))


def complement(d: int, S):
    s = set(S)
    return tuple(i for i in range(1, d + 1) if i not in s)


def _check_indices(d, I, J):
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ValueError("I and J must have the same size")
    for S in (I, J):
        if list(S) != sorted(set(S)) or any(not 1 <= i <= d for i in S):
            raise ValueError(f"index set {S} is not an increasing subset of 1..{d}")
    return I, J


def _points(seq):
    out = []
    for x in seq:
        out.append(complex(x) if isinstance(x, (float, complex)) else as_cq(x))
    return out


def _exact(points) -> bool:
    return all(isinstance(p, ComplexRational) for p in points)


def splitting_resultant(a, b, I, J):
    """``Res(h_IJ, 1/h_{I'J'})``, exact for Gaussian-rational points."""
    a, b = _points(a), _points(b)
    d = len(a)
    if len(b) != d:
        raise ValueError("a and b must have the same length")
    I, J = _check_indices(d, I, J)
    pts = a + b
    if len(set(map(complex, pts))) != len(pts):
        raise ValueError("points a_i, b_j must be pairwise distinct")
    Ic, Jc = complement(d, I), complement(d, J)
    zf = [a[i - 1] for i in I]
    pf = [b[j - 1] for j in J]
    zg = [b[j - 1] for j in Jc]
    pg = [a[i - 1] for i in Ic]
    if _exact(pts):
        f = RationalFunction.from_roots(zf, pf)
        g = RationalFunction.from_roots(zg, pg)
        return res_divisor(f, g)
    # a degree-zero divisor lists infinity when zero and pole counts differ
    return complex(res_cross_ratio(zf, pf, zg, pg))


def sum_terms(a, b, m: int, J, transposed: bool = False):
    """``[(I, Res(h_IJ, 1/h_{I'J'})) for I in C_d^m]``; with ``transposed`` the
    roles swap to ``Res(h_JI, 1/h_{J'I'})``."""
    d = len(a)
    J = tuple(J)
    if len(J) != m:
        raise ValueError("|J| must equal m")
    out = []
    for I in subsets(d, m):
        out.append((I, splitting_resultant(a, b, J, I) if transposed else splitting_resultant(a, b, I, J)))
    return out


def sum_identity(a, b, m: int, J, transposed: bool = False):
    """``sum_I Res(h_IJ, 1/h_{I'J'})``; identically 1."""
    total = ComplexRational.ZERO
    for _I, v in sum_terms(a, b, m, J, transposed):
        total = total + v
    return total


def vandermonde_lambda(a, b):
    """``Lambda = A B^-1`` with ``A = (a_i^(j-1))``, ``B = (b_i^(j-1))``."""
    a = [as_cq(x) for x in a]
    b = [as_cq(x) for x in b]
    d = len(a)
    A = [[x ** j for j in range(d)] for x in a]
    B = [[x ** j for j in range(d)] for x in b]
    Binv = inverse_exact(B)
    lam = [[sum((A[i][k] * Binv[k][j] for k in range(d)), ComplexRational.ZERO) for j in range(d)]
           for i in range(d)]
    return lam


def _minor(M, rows, cols):
    return det_exact([[M[r - 1][c - 1] for c in cols] for r in rows])


def minor_route(a, b, I, J, lam=None, lam_inv=None):
    """``det Lambda_{IJ} * det (Lambda^-1)_{JI}``, equal to the splitting
    resultant ``Res(h_IJ, 1/h_{I'J'})``."""
    d = len(a)
    I, J = _check_indices(d, I, J)
    if not I:
        return ComplexRational.ONE
    lam = lam if lam is not None else vandermonde_lambda(a, b)
    lam_inv = lam_inv if lam_inv is not None else inverse_exact(lam)
    return _minor(lam, I, J) * _minor(lam_inv, J, I)


def minor_route_signed(a, b, I, J, lam=None):
    """``(-1)^(sum i_s + j_s) det Lambda_{IJ} det Lambda_{I'J'} / det Lambda``.

    Jacobi's complementary minor theorem turns this into :func:`minor_route`.
    """
    d = len(a)
    I, J = _check_indices(d, I, J)
    lam = lam if lam is not None else vandermonde_lambda(a, b)
    sign = -1 if (sum(I) + sum(J)) % 2 else 1
    Ic, Jc = complement(d, I), complement(d, J)
    comp = _minor(lam, Ic, Jc) if Ic else ComplexRational.ONE
    main = _minor(lam, I, J) if I else ComplexRational.ONE
    return main * comp / det_exact(lam) * sign


def trig_identity_check(a, b, m: int, J) -> float:
    """Deviation from 1 of the sine-product form of the sum identity.

    ``a`` and ``b`` are real angles; the summand for ``I`` is

        prod sin(a_i - b_j') prod sin(b_j - a_i') / (prod sin(a_i - a_i') prod sin(b_j - b_j'))

    over ``i in I, i' in I', j in J, j' in J'``.
    """
    a = [float(x) for x in a]
    b = [float(x) for x in b]
    d = len(a)
    J = tuple(J)
    _check_indices(d, J, J)
    if len(J) != m:
        raise ValueError("|J| must equal m")
    pts = [cmath.exp(2j * x) for x in a + b]
    for i in range(len(pts)):
        for k in range(i):
            if abs(pts[i] - pts[k]) < 1e-12:
                raise ValueError("angles collide modulo pi")
    Jc = complement(d, J)
    total = math.fsum(_trig_term(a, b, I, complement(d, I), J, Jc) for I in subsets(d, m))
    return abs(total - 1.0)


def _trig_term(a, b, I, Ic, J, Jc) -> float:
    num = 1.0
    den = 1.0
    for i in I:
        for j in Jc:
            num *= math.sin(a[i - 1] - b[j - 1])
    for j in J:
        for i in Ic:
            num *= math.sin(b[j - 1] - a[i - 1])
    for i in I:
        for i2 in Ic:
            den *= math.sin(a[i - 1] - a[i2 - 1])
    for j in J:
        for j2 in Jc:
            den *= math.sin(b[j - 1] - b[j2 - 1])
    return num / den
