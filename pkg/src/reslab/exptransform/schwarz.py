"""The algebraic curve ``Q(z, w) = 0`` whose real section ``Q(z, conj z) = 0``
is the boundary of a quadrature domain."""
from __future__ import annotations

import numpy as np

from .. import kernels
from ..core import BivariatePolynomial, pencil_resultant, reciprocal_poly
from ..divisors import RationalFunction
from .regions import MapImage

__all__ = ["schwarz_curve", "curve_residual", "boundary_contours", "boundary_svg"]


def schwarz_curve(F) -> BivariatePolynomial:
    """``Res_zeta(F(zeta) - z, F*(zeta) - w)`` cleared of denominators and
    scaled so the ``z^n w^n`` coefficient is 1.

    The result is Hermitian: its coefficient matrix equals its conjugate
    transpose.
    """
    F = F.F if isinstance(F, MapImage) else F
    if not isinstance(F, RationalFunction) or F.is_constant():
        raise ValueError("schwarz_curve needs a nonconstant rational function")
    n = F.order
    A, B = F.num, F.den
    Q = pencil_resultant(A, -B, reciprocal_poly(A, n), -reciprocal_poly(B, n))
    if Q.is_zero():
        raise ArithmeticError("elimination is identically zero")
    corner = Q.coeff(n, n)
    if corner.is_zero():
        raise ArithmeticError("corner coefficient vanishes")
    return Q.scale(corner.inverse())


def curve_residual(Q: BivariatePolynomial, z) -> np.ndarray:
    """``|Q(z, conj z)|`` relative to ``sum |q_ij| |z|^(i+j)``."""
    z = np.asarray(z, dtype=np.complex128)
    q = np.abs(Q.to_array())
    r = np.abs(z)
    scale = np.zeros_like(r)
    for i in range(q.shape[0]):
        for j in range(q.shape[1]):
            scale = scale + q[i, j] * r ** (i + j)
    return np.abs(Q(z, np.conj(z))) / scale


def boundary_contours(Q: BivariatePolynomial, window, resolution: int = 200):
    """Zero contour of ``Re Q(x + iy, x - iy)`` as line segments.

    ``window = (xmin, xmax, ymin, ymax)``; returns a ``(k, 4)`` array of
    segments ``x1, y1, x2, y2``.
    """
    xmin, xmax, ymin, ymax = (float(v) for v in window)
    if not (xmax > xmin and ymax > ymin) or resolution < 2:
        raise ValueError("bad window or resolution")
    xs = np.linspace(xmin, xmax, resolution)
    ys = np.linspace(ymin, ymax, resolution)
    X, Y = np.meshgrid(xs, ys)  # rows follow y
    V = np.real(Q(X + 1j * Y, X - 1j * Y))
    dx = (xmax - xmin) / (resolution - 1)
    dy = (ymax - ymin) / (resolution - 1)
    return kernels.marching_squares(np.ascontiguousarray(V), xmin, ymin, dx, dy)


def boundary_svg(Q: BivariatePolynomial, window, resolution: int = 200, size: int = 400) -> str:
    segs = boundary_contours(Q, window, resolution)
    xmin, xmax, ymin, ymax = (float(v) for v in window)
    sx = size / (xmax - xmin)
    sy = size / (ymax - ymin)
    lines = []
    for xa, ya, xb, yb in segs:
        x1, y1 = (xa - xmin) * sx, (ymax - ya) * sy
        x2, y2 = (xb - xmin) * sx, (ymax - yb) * sy
        lines.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    body = "\n".join(lines)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'<g stroke="black" stroke-width="1" fill="none">\n{body}\n</g>\n</svg>\n'
    )
