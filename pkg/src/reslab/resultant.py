"""Resultants of rational functions on the Riemann sphere.

Three independent routes compute the same quantity: the divisor action
``g((f))``, the product of cross ratios over zeros and poles, and a ratio of
four polynomial resultants of numerators and denominators.
"""
from __future__ import annotations

import math

from .core import ComplexRational, Polynomial, sylvester_resultant
from .divisors import (
    INFINITE,
    INFINITY,
    ZERO,
    Admissibility,
    IndeterminateError,
    RationalFunction,
    as_point,
    divisor_action,
    divisor_of,
    is_admissible,
    local_symbol,
    same_point,
)

__all__ = [
    "NotAdmissibleError",
    "res_divisor",
    "res_cross_ratio",
    "cross_ratio",
    "res_four_poly",
    "res_pol",
    "reduced_resultant",
    "coordinate_change_factor",
    "weil_product",
    "mero_discriminant",
    "mutual_energy",
]

_ONE = ComplexRational.ONE
_ZERO = ComplexRational.ZERO


class NotAdmissibleError(ValueError):
    """Orders of f and g change sign across common points."""


def _require_admissible(f, g, excluded=None):
    kind = is_admissible(f, g, excluded)
    if kind is Admissibility.NOT_ADMISSIBLE:
        raise NotAdmissibleError("pair is not admissible: ord f * ord g changes sign")
    return kind


def res_divisor(f: RationalFunction, g: RationalFunction, numeric: bool = False):
    """``Res(f, g) = g((f))``.

    An exact divisor of ``f`` is required unless ``numeric`` is set, in which
    case numerically located roots are accepted and the value is a complex
    float.
    """
    _require_admissible(f, g)
    D = divisor_of(f)
    if D.numeric and not numeric:
        raise ValueError("divisor of f is only known numerically; pass numeric=True "
                         "or build f from its roots")
    return divisor_action(g, D)


def cross_ratio(a, b, c, d):
    """``(a, b, c, d) = (a-c)/(a-d) * (b-d)/(b-c)``, with limits at infinity."""
    a, b, c, d = (as_point(x) for x in (a, b, c, d))
    num, den = [], []
    if a is not INFINITY and c is not INFINITY:
        num.append(a - c)
    if b is not INFINITY and d is not INFINITY:
        num.append(b - d)
    if a is not INFINITY and d is not INFINITY:
        den.append(a - d)
    if b is not INFINITY and c is not INFINITY:
        den.append(b - c)
    value = _ONE
    for x in num:
        value = value * x
    for x in den:
        if x == 0:
            raise ZeroDivisionError("cross ratio has a pole: coincident points")
        value = value / x
    return value


def res_cross_ratio(zeros_f, poles_f, zeros_g, poles_g):
    """``prod_{i,j} (a_i, b_i, c_j, d_j)`` over zero/pole lists.

    Each function must list as many zeros as poles, counting infinity, so
    that its divisor has degree zero.
    """
    if len(zeros_f) != len(poles_f) or len(zeros_g) != len(poles_g):
        raise ValueError("each function needs equally many zeros and poles")
    value = _ONE
    for a, b in zip(zeros_f, poles_f):
        for c, d in zip(zeros_g, poles_g):
            try:
                value = value * cross_ratio(a, b, c, d)
            except ZeroDivisionError:
                raise ValueError("points of f and g coincide: cross ratio is singular") from None
    return value


def res_pol(p: Polynomial, q: Polynomial):
    """Polynomial resultant with the convention Res(c, q) = c^deg q."""
    return sylvester_resultant(p, q)


def _infinity_prefactor(f: RationalFunction, k: int):
    """``f(infinity)^k`` as a value or ZERO/INFINITE marker."""
    if k == 0:
        return _ONE
    o = f.ord_infinity
    if o == 0:
        return f.lead_ratio ** k
    return ZERO if o * k > 0 else INFINITE


def _four_ratio(f1, f2, g1, g2, value=_ONE, zeros=0, infs=0):
    """``value * Res(f1,g1) Res(f2,g2) / (Res(f1,g2) Res(f2,g1))`` with
    vanishing factors counted instead of multiplied in."""
    for p, q, up in ((f1, g1, True), (f2, g2, True), (f1, g2, False), (f2, g1, False)):
        r = res_pol(p, q)
        if r.is_zero():
            if up:
                zeros += 1
            else:
                infs += 1
        else:
            value = value * r if up else value / r
    if zeros and infs:
        raise IndeterminateError("product meets both a zero and a pole factor")
    if zeros:
        return ZERO
    if infs:
        return INFINITE
    return value


def res_four_poly(f: RationalFunction, g: RationalFunction):
    """Resultant from coefficients alone:

        f(inf)^ord_inf(g) g(inf)^ord_inf(f)
            * Res(f1, g1) Res(f2, g2) / (Res(f1, g2) Res(f2, g1))

    with ``f = f1/f2``, ``g = g1/g2``.  Vanishing polynomial resultants and
    degenerate prefactors combine into the ZERO/INFINITE markers.
    """
    _require_admissible(f, g)
    zeros = infs = 0
    value = _ONE
    for x in (_infinity_prefactor(f, g.ord_infinity), _infinity_prefactor(g, f.ord_infinity)):
        if x is ZERO:
            zeros += 1
        elif x is INFINITE:
            infs += 1
        else:
            value = value * x
    return _four_ratio(f.num, f.den, g.num, g.den, value, zeros, infs)


_SIGMA = RationalFunction(Polynomial([1]), Polynomial([0, 1]))  # 1/z


def reduced_resultant(f: RationalFunction, g: RationalFunction):
    """Resultant reduced at infinity with the local coordinate ``1/z``:

        tau_inf(1/z, g)^ord_inf(f) / tau_inf(f, g) * prod_{x != inf} g(x)^ord_x(f)

    For polynomials this is the classical polynomial resultant.  A common
    finite zero or pole gives an exact 0; only a forced infinity is reported
    with the :data:`INFINITE` marker.
    """
    _require_admissible(f, g, excluded=INFINITY)
    prefactor = local_symbol(_SIGMA, g, INFINITY) ** f.ord_infinity / local_symbol(f, g, INFINITY)
    rest = _finite_action(f, g)
    if rest is ZERO:
        return _ZERO
    if rest is INFINITE:
        return rest
    return prefactor * rest


def _finite_action(f: RationalFunction, g: RationalFunction):
    """``prod_{x finite} g(x)^ord_x(f)`` exactly, without root finding.

    With monic ``f1``, ``Res(f1, g1) = prod g1(a_i)`` over the roots of
    ``f1``, so the product is a ratio of four polynomial resultants.
    """
    return _four_ratio(f.num.monic(), f.den.monic(), g.num, g.den)


def coordinate_change_factor(f: RationalFunction, g: RationalFunction, sigma: RationalFunction):
    """``(-tau_inf(sigma, 1/z))^(ord f * ord g)``: multiplies the resultant
    reduced with ``1/z`` into the one reduced with ``sigma`` (a coordinate
    with a simple zero at infinity)."""
    if sigma.ord_infinity != 1:
        raise ValueError("sigma must have a simple zero at infinity")
    k = f.ord_infinity * g.ord_infinity
    return (-local_symbol(sigma, _SIGMA, INFINITY)) ** k


def weil_product(f: RationalFunction, g: RationalFunction) -> ComplexRational:
    """Product of all local symbols ``tau_a(f, g)``; always 1."""
    Df, Dg = divisor_of(f), divisor_of(g)
    if Df.numeric or Dg.numeric:
        raise ValueError("local symbols need exact divisors")
    points = set(Df) | set(Dg) | {INFINITY}
    value = _ONE
    for a in points:
        value = value * local_symbol(f, g, a)
    return value


def _finite_zeros_poles(f: RationalFunction):
    D = divisor_of(f)
    if INFINITY in D:
        raise ValueError("f has a zero or pole at infinity")
    if any(abs(k) != 1 for k in D.values()):
        raise ValueError("zeros and poles must be simple")
    return D.zeros(), D.poles(), D.numeric


def mero_discriminant(f: RationalFunction, method: str = "direct"):
    """Renormalized self-resultant

        prod_{i!=j} (a_i - a_j) prod_{i!=j} (b_i - b_j)
            / (prod_{i,j} (a_i - b_j) prod_{i,j} (b_i - a_j))

    for simple finite zeros ``a_i`` and poles ``b_i``.  ``method="respol"``
    evaluates the equivalent ratio of polynomial resultants of the monic
    numerator ``f1`` and denominator ``f2``.
    """
    if f.is_constant():
        raise ValueError("discriminant of a constant")
    if method == "respol":
        f1, f2 = f.num.monic(), f.den.monic()
        if f1.degree != f2.degree:
            raise ValueError("f has a zero or pole at infinity")
        for p in (f1, f2):
            if p.degree >= 1 and sylvester_resultant(p, p.derivative(), p.degree, p.degree - 1).is_zero():
                raise ValueError("zeros and poles must be simple")
        num = _ONE
        for p in (f1, f2):
            if p.degree >= 1:
                num = num * sylvester_resultant(p, p.derivative(), p.degree, p.degree - 1)
        return num / (res_pol(f1, f2) * res_pol(f2, f1))
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    zs, ps, numeric = _finite_zeros_poles(f)
    if numeric:
        zs = [complex(x) for x in zs]
        ps = [complex(x) for x in ps]
    value = _ONE if not numeric else 1 + 0j
    for pts in (zs, ps):
        for i, a in enumerate(pts):
            for j, b in enumerate(pts):
                if i != j:
                    value = value * (a - b)
    for a in zs:
        for b in ps:
            value = value / ((a - b) * (b - a))
    return value


def mutual_energy(f: RationalFunction, g: RationalFunction) -> float:
    """``I(mu_f, mu_g) = -sum D_f(a) D_g(b) log|a - b|`` over finite points.

    Equals ``-log|Res(f, g)|`` for pairs with disjoint supports.
    """
    Df, Dg = divisor_of(f), divisor_of(g)
    for p in Df:
        for q in Dg:
            if same_point(p, q):
                raise ValueError("supports meet: mutual energy is infinite")
    total = math.fsum(
        -k * m * math.log(abs(complex(a) - complex(b)))
        for a, k in Df.finite().items()
        for b, m in Dg.finite().items()
    )
    return total
