"""Elimination functions ``E(z, w) = Res(f - z, g - w)`` of rational functions."""
from __future__ import annotations

from dataclasses import dataclass

from .core import BivariatePolynomial, ComplexRational, Polynomial, as_cq, interpolate, pencil_resultant
from .divisors import INFINITE, ZERO, Admissibility, RationalFunction, is_admissible
from .resultant import res_four_poly, res_pol

__all__ = [
    "EliminationFunction",
    "elimination_function",
    "extended_elimination",
    "pole_image_poly",
]

_ONE = ComplexRational.ONE


@dataclass(frozen=True)
class EliminationFunction:
    """``E(z, w) = Q(z, w) / (P(z) R(w))`` with monic ``P`` and ``R``.

    ``P`` vanishes at the images under ``f`` of the poles of ``g``; ``R`` at
    the images under ``g`` of the poles of ``f``.
    """

    Q: BivariatePolynomial
    P: Polynomial
    R: Polynomial

    def __call__(self, z, w):
        den = self.P(z) * self.R(w)
        num = self.Q(z, w)
        if isinstance(den, ComplexRational):
            if den.is_zero():
                return INFINITE
            return num / den
        return num / den

    def to_json(self):
        return {
            "Q": self.Q.to_json(),
            "P": self.P.to_json()["coeffs"],
            "R": self.R.to_json()["coeffs"],
        }

    @classmethod
    def from_json(cls, obj) -> "EliminationFunction":
        return cls(
            BivariatePolynomial.from_json(obj["Q"]),
            Polynomial.from_json(obj["P"]),
            Polynomial.from_json(obj["R"]),
        )


def _check_no_common_poles(f: RationalFunction, g: RationalFunction):
    if f.is_constant() or g.is_constant():
        raise ValueError("elimination needs nonconstant f and g")
    if f.ord_infinity < 0 and g.ord_infinity < 0:
        raise ValueError("f and g share the pole at infinity")
    if f.den.degree >= 1 and g.den.degree >= 1 and res_pol(f.den, g.den).is_zero():
        raise ValueError("f and g have a common finite pole")


def pole_image_poly(f: RationalFunction, g: RationalFunction) -> Polynomial:
    """``prod_{d in g^-1(inf)} (t - f(d))``, monic of degree ``ord g``.

    Finite poles contribute ``Res(g2, t f2 - f1) / Res(g2, f2)`` for monic
    ``g2``; a pole of ``g`` at infinity contributes ``(t - f(inf))^k``.  The
    finite part is recovered by exact interpolation in ``t``.
    """
    g2 = g.den.monic()
    f1, f2 = f.num, f.den
    part = Polynomial.constant(1)
    d = g2.degree
    if d >= 1:
        scale = res_pol(g2, f2)
        nodes = [as_cq(k) for k in range(d + 1)]
        vals = [res_pol(g2, f2 * t - f1) / scale for t in nodes]
        part = interpolate(nodes, vals)
    k = -g.ord_infinity
    if k > 0:
        at_inf = f.value_at("inf")
        part = part * Polynomial([-at_inf, 1]) ** k
    return part


def elimination_function(f: RationalFunction, g: RationalFunction) -> EliminationFunction:
    """Exact ``(Q, P, R)`` with ``Res(f - z, g - w) = Q / (P R)``.

    ``S(z, w) = Res_zeta(f1 - z f2, g1 - w g2)`` (formal degrees ``ord f``,
    ``ord g``) is computed by evaluation at integer nodes and interpolation.
    ``S`` is a constant multiple of ``Q``; the constant is fixed by the
    corner identity ``[w^m] Q = P(z)`` and cross-checked against
    ``[z^n] Q = R(w)`` and a directly computed value of the resultant.
    """
    _check_no_common_poles(f, g)
    m, n = f.order, g.order
    S = pencil_resultant(f.num, -f.den, g.num, -g.den)
    P = pole_image_poly(f, g)
    R = pole_image_poly(g, f)
    corner = S.column(m)
    if corner.degree != n:
        raise ArithmeticError("unexpected degree of the leading w-coefficient")
    Q = S.scale(corner.lc.inverse())
    if Q.column(m) != P or Q.row(n) != R:
        raise ArithmeticError("elimination polynomial does not match its pole data")
    E = EliminationFunction(Q, P, R)
    _spot_check(E, f, g)
    return E


def _spot_check(E: EliminationFunction, f, g):
    """Compare one regular sample with the four-resultant route."""
    for k in range(1, 40):
        z, w = as_cq(k) / 3 + ComplexRational(0, 1) / 7, as_cq(-k) / 5 + ComplexRational(0, 2) / 11
        F, G = f - z, g - w
        if F.is_zero() or G.is_zero():
            continue
        if is_admissible(F, G) is not Admissibility.GENERIC:
            continue
        val = E(z, w)
        if val is INFINITE:
            continue
        if res_four_poly(F, G) != val:
            raise ArithmeticError("elimination function disagrees with the resultant")
        return
    raise ArithmeticError("no regular sample point found")


def extended_elimination(f: RationalFunction, g: RationalFunction, z, w, z0, w0):
    """``Res((f - z)/(f - z0), (g - w)/(g - w0))``.

    Defined for quadruples where ``f^-1(z), f^-1(z0)`` avoid
    ``g^-1(w), g^-1(w0)``; otherwise :class:`ValueError`.
    """
    z, w, z0, w0 = (as_cq(x) for x in (z, w, z0, w0))
    if z == z0 or w == w0:
        raise ValueError("z == z0 or w == w0 makes the quotient constant")
    F = RationalFunction(f.num - f.den * z, f.num - f.den * z0)
    G = RationalFunction(g.num - g.den * w, g.num - g.den * w0)
    if is_admissible(F, G) is not Admissibility.GENERIC:
        raise ValueError("fibres of f over {z, z0} meet fibres of g over {w, w0}")
    value = res_four_poly(F, G)
    assert value is not ZERO and value is not INFINITE
    return value
