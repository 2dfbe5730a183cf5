"""Quadrature routes: the defining double integral, moments and the
Cauchy transform."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuadratureError",
    "MAX_LEVEL",
    "exp_transform_numeric",
    "extended_exp_transform",
    "cauchy_transform",
    "MomentReport",
    "moment_matrix",
    "recode_moments",
]

MAX_LEVEL = 7


class QuadratureError(ArithmeticError):
    """Refinement budget exhausted before two estimates agreed."""


def _richardson(estimate, tol, max_level, close):
    """Romberg table over halvings of the midpoint step.

    The midpoint error expands in even powers of h, so column ``j`` removes
    the ``h^(2j)`` term.  Stops when successive diagonal entries satisfy
    ``close``.
    """
    row = [estimate(0)]
    for level in range(1, max_level + 1):
        new = [estimate(level)]
        for j in range(1, level + 1):
            new.append(new[j - 1] + (new[j - 1] - row[j - 1]) / (4 ** j - 1))
        if close(new[-1], row[-1]):
            return new[-1]
        row = new
    raise QuadratureError(f"no agreement within tol={tol} after {max_level} refinements")


def exp_transform_numeric(region, z, w, tol: float = 1e-8, max_level: int = MAX_LEVEL) -> complex:
    """``exp(-(1/pi) int 1/((zeta - z) conj(zeta - w)) dA)`` by refined
    midpoint quadrature."""
    z, w = complex(z), complex(w)
    region.require_outside(z, w, margin=math.sqrt(tol))

    def estimate(level):
        return cmath.exp(-region.cauchy_sum(z, w, level=level) / math.pi)

    return _richardson(estimate, tol, max_level, lambda a, b: abs(a - b) <= tol)


def extended_exp_transform(region, z, w, z0, w0, tol: float = 1e-8, max_level: int = MAX_LEVEL) -> complex:
    """Transform built from the difference kernel
    ``(1/(zeta - z) - 1/(zeta - z0)) conj(1/(zeta - w) - 1/(zeta - w0))``."""
    z, w, z0, w0 = (complex(x) for x in (z, w, z0, w0))
    region.require_outside(z, w, z0, w0, margin=math.sqrt(tol))

    def estimate(level):
        return cmath.exp(-region.cauchy_sum(z, w, z0, w0, extended=True, level=level) / math.pi)

    return _richardson(estimate, tol, max_level, lambda a, b: abs(a - b) <= tol)


def cauchy_transform(region, z, tol: float = 1e-8, max_level: int = MAX_LEVEL) -> complex:
    """``(1/pi) int dA(zeta) / (z - zeta)``."""
    z = complex(z)
    region.require_outside(z, margin=math.sqrt(tol))

    def estimate(level):
        pts, wts = region.nodes(level)
        return complex(np.sum(wts / (z - pts))) / math.pi

    return _richardson(estimate, tol, max_level, lambda a, b: abs(a - b) <= tol * max(1.0, abs(a)))


def recode_moments(a: np.ndarray) -> np.ndarray:
    """``b`` from ``a`` through ``exp(-sum a_mn X^(m+1) Y^(n+1)) = 1 - sum b_mn X^(m+1) Y^(n+1)``,
    truncated at degree ``N + 1`` in each variable."""
    a = np.asarray(a, dtype=np.complex128)
    N = a.shape[0] - 1
    size = N + 2
    G = np.zeros((size, size), dtype=np.complex128)
    G[1:, 1:] = -a

    def mul(P, R):
        out = np.zeros_like(P)
        for i in range(size):
            for j in range(size):
                if P[i, j] != 0:
                    out[i:, j:] += P[i, j] * R[: size - i, : size - j]
        return out

    E = np.zeros((size, size), dtype=np.complex128)
    E[0, 0] = 1.0
    term = E.copy()
    for k in range(1, size):
        term = mul(term, G) / k
        E += term
    return -E[1:, 1:]


@dataclass
class MomentReport:
    """Moments ``a_mn``, recoded ``b_mn`` and the quadrature-domain order.

    ``order`` is the smallest ``N`` with ``|det b_{0..N}|`` below
    ``tol * max|b|^(N+1)``, or ``None`` if no leading block degenerates.
    """

    a: np.ndarray
    b: np.ndarray
    dets: list
    order: int | None
    tol: float

    def to_json(self):
        def cm(M):
            return [[[float(x.real), float(x.imag)] for x in row] for row in M]
        return {"a": cm(self.a), "b": cm(self.b), "dets": [abs(d) for d in self.dets],
                "order": self.order, "tol": self.tol}


def moment_matrix(region, N: int, tol: float = 1e-6, quad_tol: float = 1e-11,
                  max_level: int = MAX_LEVEL) -> MomentReport:
    if N < 0:
        raise ValueError("N must be non-negative")

    def estimate(level):
        return np.asarray(region.moment_sums(N, level), dtype=np.complex128) / math.pi

    def close(A, B):
        return float(np.max(np.abs(A - B))) <= quad_tol * max(1.0, float(np.max(np.abs(A))))

    a = _richardson(estimate, quad_tol, max_level, close)
    b = recode_moments(a)
    dets, order = [], None
    scale = float(np.max(np.abs(b))) or 1.0
    for k in range(N + 1):
        d = complex(np.linalg.det(b[: k + 1, : k + 1]))
        dets.append(d)
        if order is None and abs(d) < tol * scale ** (k + 1):
            order = k
    return MomentReport(a, b, dets, order, tol)
