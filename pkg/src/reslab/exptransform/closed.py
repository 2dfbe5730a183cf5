"""Closed forms of the exponential transform of quadrature domains.

For ``Omega = F(D)`` with ``F = A/B`` rational and univalent on the unit
disk, ``E(z, w)`` is the resultant of ``F - z`` and ``F* - conj w`` where
``F*(u) = conj F(1/conj u)``.  Kernels take their second argument in an
anti-holomorphic slot: ``K(z, w)`` is built from ``conj w``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..core import (
    BivariatePolynomial,
    ComplexRational,
    Polynomial,
    RootFindingError,
    as_cq,
    interpolate,
    pencil_resultant,
    reciprocal_poly,
    sylvester_resultant,
)
from ..divisors import INFINITE, ZERO, RationalFunction, divisor_action, divisor_of
from ..kernels import aberth
from ..resultant import res_four_poly
from .regions import MapImage, RegionError

__all__ = [
    "HermitianRationalKernel",
    "reflect",
    "exp_transform_disk",
    "disk_kernel",
    "exp_transform_qd",
    "exp_transform_explicit",
    "exp_transform_polydet",
    "polydet_matrix",
    "pushforward_transform",
]


@dataclass(frozen=True)
class HermitianRationalKernel:
    """``K(z, w) = c Q(z, conj w) / (T(z) conj T(w))``.

    ``Q`` is a polynomial in ``(z, v)`` whose second variable receives
    ``conj w``.
    """

    c: complex
    Q: BivariatePolynomial
    T: Polynomial

    def __call__(self, z, w):
        z = np.asarray(z, dtype=np.complex128)
        w = np.asarray(w, dtype=np.complex128)
        val = self.c * self.Q(z, np.conj(w)) / (self.T(z) * np.conj(self.T(w)))
        return complex(val) if np.ndim(val) == 0 else val

    def hermitian_defect(self, points) -> float:
        """``max |K(w, z) - conj K(z, w)|`` over pairs from ``points``."""
        pts = np.asarray(points, dtype=np.complex128)
        Z, W = np.meshgrid(pts, pts, indexing="ij")
        return float(np.max(np.abs(self(W, Z) - np.conj(self(Z, W)))))

    def holomorphic_slice(self, a) -> RationalFunction:
        """``v -> conj K(a, v)`` as a rational function of ``v``."""
        a = complex(a)
        q = self.Q.to_array()
        zpow = np.conj(a) ** np.arange(q.shape[0])
        num = np.conj(self.c) * (np.conj(q) * zpow[:, None]).sum(axis=0)
        scale = np.conj(complex(self.T(a)))
        return RationalFunction(Polynomial([as_cq(complex(x)) for x in num]),
                                self.T * as_cq(scale))

    def to_json(self):
        return {"c": [self.c.real, self.c.imag], "Q": self.Q.to_json(), "T": self.T.to_json()["coeffs"]}


def reflect(F: RationalFunction) -> RationalFunction:
    """``F*(u) = conj F(1/conj u)`` via reciprocal polynomials of degree ``ord F``."""
    n = F.order
    return RationalFunction(reciprocal_poly(F.num, n), reciprocal_poly(F.den, n))


def exp_transform_disk(r: float, z, w) -> complex:
    """``1 - r^2/(z conj w)`` for the disk ``|z| < r``."""
    z, w = complex(z), complex(w)
    if not r > 0:
        raise ValueError("radius must be positive")
    if abs(z) <= r or abs(w) <= r:
        raise RegionError("argument inside the closed disk")
    return 1 - r * r / (z * w.conjugate())


def disk_kernel(r=1) -> HermitianRationalKernel:
    """The disk transform as a kernel: ``(z conj w - r^2)/(z conj w)``."""
    r2 = as_cq(r) * as_cq(r)
    Q = BivariatePolynomial([[-r2, ComplexRational.ZERO], [ComplexRational.ZERO, ComplexRational.ONE]])
    return HermitianRationalKernel(1 + 0j, Q, Polynomial([0, 1]))


def _map_image(F) -> MapImage:
    return F if isinstance(F, MapImage) else MapImage(F)


def exp_transform_qd(F, z, w):
    """``Res_u(F(u) - z, F*(u) - conj w)`` by the four-resultant formula.

    ``F`` (a rational function or :class:`MapImage`) must carry a passing
    univalence certificate; float arguments are converted exactly.
    """
    region = _map_image(F)
    region.require_outside(z, w)
    F = region.F
    zq, wq = as_cq(complex(z)), as_cq(complex(w))
    value = res_four_poly(F - zq, reflect(F) - wq.conj())
    if value is ZERO or value is INFINITE:
        raise ArithmeticError("degenerate resultant for points outside the region")
    return complex(value)


def _explicit_parts(A: Polynomial, B: Polynomial):
    n = max(A.degree, B.degree)
    m = B.degree
    Bs = reciprocal_poly(B, m)
    F0 = A.coeff(0) / B.coeff(0)
    nodes = [as_cq(k) for k in range(n + 1)]
    vals = [(F0 - t) ** (n - m) * sylvester_resultant(A - B * t, Bs, n, m) for t in nodes]
    T = interpolate(nodes, vals)
    Q = pencil_resultant(A, -B, reciprocal_poly(A, n), -reciprocal_poly(B, n))
    # calibrated against the four-resultant route
    sign = -1 if (n - m) % 2 else 1
    c = complex(sylvester_resultant(B, Bs, m, m)) * sign
    return c, Q, T


def exp_transform_explicit(F, den: Polynomial | None = None) -> HermitianRationalKernel:
    """Kernel ``(-1)^(n-m) Res(B, B#) Res(A - zB, A# - conj(w) B#) / (T(z) conj T(w))``
    with ``T(z) = (F(0) - z)^(n-m) Res(A - zB, B#)``.

    ``B#`` is the reciprocal of ``B`` at its own degree ``m``; ``A#`` and the
    ``B#`` inside the pencil use degree ``n = ord F``.  Pass ``F`` as a
    :class:`RationalFunction` or as numerator polynomial plus ``den``; a
    non-monic ``den`` is normalized with a warning.
    """
    if den is not None:
        A = F if isinstance(F, Polynomial) else Polynomial(F)
        if not den.lc == ComplexRational.ONE:
            warnings.warn("denominator is not monic; normalizing", stacklevel=2)
        F = RationalFunction(A, den)
    region = _map_image(F)
    c, Q, T = _explicit_parts(region.F.num, region.F.den)
    return HermitianRationalKernel(c, Q, T)


def polydet_matrix(a, z, w) -> np.ndarray:
    """The ``2n x 2n`` structured matrix for ``F(u) = a_1 u + ... + a_n u^n``.

    Columns ``k < n`` carry ``-1`` on the diagonal and ``x_1..x_n`` below it;
    columns ``n + k`` carry ``y_n..y_1`` from row ``k`` and ``-1`` at row
    ``n + k``, with ``x_i = a_i/z`` and ``y_i = conj a_i / conj w``.
    """
    a = np.asarray([complex(x) for x in a], dtype=np.complex128)
    a = np.trim_zeros(a, "b")
    n = len(a)
    if n == 0:
        raise ValueError("F is identically zero")
    x = a / complex(z)
    y = np.conj(a) / np.conj(complex(w))
    M = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    for k in range(n):
        M[k, k] = -1
        for i in range(n):
            M[k + 1 + i, k] = x[i] if k + 1 + i < 2 * n else 0
        for i in range(n):
            M[k + i, n + k] = y[n - 1 - i]
        M[k + n, n + k] = -1
    return M


def exp_transform_polydet(a, z, w) -> complex:
    """Determinant formula for polynomial ``F(u) = sum_{i>=1} a_i u^i``;
    ``a = [a_1, ..., a_n]``."""
    M = polydet_matrix(a, z, w)
    return complex(np.linalg.det(M))


# -- pushforward --------------------------------------------------------------

def _fibre(F: RationalFunction, z):
    """Numeric divisor of ``F - z`` as ``[(point, mult)]``; infinity is omitted
    because every transform equals 1 there."""
    A, B = F.num.to_array(), F.den.to_array()
    size = max(len(A), len(B))
    P = np.pad(A, (0, size - len(A))) - complex(z) * np.pad(B, (0, size - len(B)))
    P = np.trim_zeros(P, "b")
    out = []
    if len(P) > 1:
        out += [(r, 1) for r in _roots(P)]
    if len(B) > 1:
        out += [(r, -1) for r in _roots(B)]
    return out


def _roots(c):
    roots, ok, _ = aberth(c)
    if not ok:
        raise RootFindingError("root iteration did not converge")
    return roots


def pushforward_transform(E1, F: RationalFunction, p: int, z, w, method: str = "product") -> complex:
    """``E2(z, w)^p`` for ``Omega_2 = F(Omega_1)`` with ``F`` p-valent.

    ``method="product"`` multiplies ``E1(alpha, beta)^(D_z(alpha) D_w(beta))``
    over the divisors of ``F - z`` and ``F - w``.  ``method="nested"`` forms
    ``Res(F - z, Res(F - w, E1))``: for each ``alpha`` the inner factor is
    ``conj((F - w)((H_alpha)))`` with ``H_alpha(v) = conj E1(alpha, v)``
    holomorphic, so the anti-holomorphic slot becomes a conjugation.
    """
    if p < 1:
        raise ValueError("p must be positive")
    Dz = _fibre(F, z)
    if method == "product":
        Dw = _fibre(F, w)
        value = 1 + 0j
        for a, k in Dz:
            for b, m in Dw:
                value *= complex(E1(a, b)) ** (k * m)
        return value
    if method != "nested":
        raise ValueError(f"unknown method {method!r}")
    if not isinstance(E1, HermitianRationalKernel):
        raise TypeError("nested route needs a HermitianRationalKernel")
    G = F - as_cq(complex(w))
    value = 1 + 0j
    for a, k in Dz:
        H = E1.holomorphic_slice(a)
        inner = divisor_action(G, divisor_of(H))
        if inner is ZERO or inner is INFINITE:
            raise ArithmeticError("point of the fibre lies on the kernel divisor")
        value *= complex(inner).conjugate() ** k
    return value
