"""Meromorphic functions on the torus C/(Z + tau Z) through theta quotients."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels

__all__ = [
    "TorusModulus",
    "TorusDivisorPair",
    "AbelError",
    "theta_eval",
    "theta_odd",
    "abel_check",
    "reduce_point",
    "torus_resultant",
    "weierstrass_xi_check",
    "xi_printed_residual",
]

MIN_IM_TAU = 1e-3
TAIL = 1e-17
LATTICE_TOL = 1e-8
WINDOW = 5


class AbelError(ValueError):
    """Zeros and poles do not sum to a lattice point."""


def _trunc_for(im_tau: float, s: float) -> int:
    """Half-width K with ``exp(-pi Im(tau) (K - s)^2)`` below TAIL, where ``s``
    bounds ``|Im zeta|/Im(tau) + 1/2``."""
    return int(math.ceil(s + math.sqrt(-math.log(TAIL) / (math.pi * im_tau)))) + 1


@dataclass(frozen=True)
class TorusModulus:
    """``tau`` with ``Im tau >= 1e-3``; ``trunc`` covers arguments with
    ``|Im zeta| <= 2 Im tau``, the range of differences of reduced points."""

    tau: complex
    trunc: int = field(default=0)

    def __post_init__(self):
        tau = complex(self.tau)
        if tau.imag < MIN_IM_TAU:
            raise ValueError(f"Im tau must be at least {MIN_IM_TAU}")
        object.__setattr__(self, "tau", tau)
        if not self.trunc:
            object.__setattr__(self, "trunc", _trunc_for(tau.imag, 2.5))

    @property
    def tail_bound(self) -> float:
        """Bound on the largest omitted term for ``|Im zeta| <= 2 Im tau``."""
        return math.exp(-math.pi * self.tau.imag * (self.trunc - 2.5) ** 2)


@dataclass(frozen=True)
class TorusDivisorPair:
    """Zeros ``a`` and poles ``b`` of one function, equally many."""

    a: tuple
    b: tuple

    def __post_init__(self):
        a = tuple(complex(x) for x in self.a)
        b = tuple(complex(x) for x in self.b)
        if len(a) != len(b):
            raise ValueError("zeros and poles must be length-matched")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def to_json(self):
        return {"a": [[x.real, x.imag] for x in self.a], "b": [[x.real, x.imag] for x in self.b]}


def theta_eval(zeta, M: TorusModulus):
    """``sum_k exp(pi i (k^2 tau + k (1 + tau + 2 zeta)))``, truncated so the
    omitted tail stays below 1e-17 of the largest term."""
    z = np.asarray(zeta, dtype=np.complex128).ravel()
    s = float(np.max(np.abs(z.imag))) / M.tau.imag + 0.5 if z.size else 0.5
    K = max(M.trunc, _trunc_for(M.tau.imag, s))
    out = kernels.theta_sum(z, M.tau, K)
    return complex(out[0]) if np.ndim(zeta) == 0 else out.reshape(np.shape(zeta))


def theta_odd(zeta, M: TorusModulus):
    """``exp(pi i zeta) theta(zeta)``: the odd normalization of the same theta
    function (``theta`` itself satisfies ``theta(-z) = -exp(2 pi i z) theta(z)``)."""
    return np.exp(1j * np.pi * np.asarray(zeta, dtype=np.complex128)) * theta_eval(zeta, M)


def _lattice_coords(s: complex, tau: complex):
    y = s.imag / tau.imag
    return s.real - y * tau.real, y


def abel_check(D: TorusDivisorPair, M: TorusModulus, window: int = WINDOW, tol: float = LATTICE_TOL):
    """``(ok, (m, n))``: whether ``sum(a - b)`` lies within ``tol`` of the
    lattice point ``m + n tau`` nearest to it in ``|m|, |n| <= window``."""
    s = sum(D.a, 0j) - sum(D.b, 0j)
    x, y = _lattice_coords(s, M.tau)
    m = int(min(window, max(-window, round(x))))
    n = int(min(window, max(-window, round(y))))
    return abs(s - (m + n * M.tau)) <= tol, (m, n)


def reduce_point(z, M: TorusModulus) -> complex:
    """Representative ``x + y tau`` with ``0 <= x, y < 1``."""
    z = complex(z)
    x, y = _lattice_coords(z, M.tau)
    return z - math.floor(x) - math.floor(y) * M.tau


def _normalized(D: TorusDivisorPair, M: TorusModulus):
    """Reduced representatives with the last pole moved so that
    ``sum(a - b)`` is an integer; the theta quotient is then periodic."""
    a = [reduce_point(x, M) for x in D.a]
    b = [reduce_point(x, M) for x in D.b]
    ok, (_m, n) = abel_check(TorusDivisorPair(a, b), M, window=max(WINDOW, 2 * len(a) + 1))
    if not ok:
        raise AbelError("divisor is not principal: sum(a - b) is not a lattice point")
    if b and n:
        b[-1] += n * M.tau
    return a, b


def _same_mod_lattice(p, q, M, tol=LATTICE_TOL) -> bool:
    x, y = _lattice_coords(p - q, M.tau)
    return abs((p - q) - (round(x) + round(y) * M.tau)) <= tol


def torus_resultant(Df: TorusDivisorPair, Dg: TorusDivisorPair, M: TorusModulus) -> complex:
    """``prod_{i,j} theta(c_j - a_i) theta(d_j - b_i) / (theta(c_j - b_i) theta(d_j - a_i))``
    for ``f`` with zeros ``a``, poles ``b`` and ``g`` with zeros ``c``, poles ``d``."""
    a, b = _normalized(Df, M)
    c, d = _normalized(Dg, M)
    for p in a + b:
        for q in c + d:
            if _same_mod_lattice(p, q, M):
                raise ValueError("supports of f and g meet modulo the lattice")
    A = np.array(a, dtype=np.complex128)[:, None]
    B = np.array(b, dtype=np.complex128)[:, None]
    C = np.array(c, dtype=np.complex128)[None, :]
    Dd = np.array(d, dtype=np.complex128)[None, :]
    num = theta_eval(C - A, M) * theta_eval(Dd - B, M)
    den = theta_eval(C - B, M) * theta_eval(Dd - A, M)
    return complex(np.prod(num / den))


def _phi(x, y, M):
    return theta_odd(x - y, M) * theta_odd(x + y, M)


def _rho_theta(ai, aj, bi, bj, M):
    """Squared-theta form of the resultant of ``phi(., ai)/phi(., bi)`` and
    ``phi(., bj)/phi(., aj)``."""
    val = _phi(ai, bj, M) * _phi(aj, bi, M) / (_phi(ai, aj, M) * _phi(bi, bj, M))
    return complex(val) ** 2


def weierstrass_xi_check(a1, a2, b1, b2, z0, M: TorusModulus, tol: float = 1e-8):
    """``(xi1, xi2, deviation)`` where ``deviation = |(1 - xi1 - xi2)^2 - 4 xi1 xi2|``,
    the square-free form of ``+-sqrt(xi1) +- sqrt(xi2) = 1``.

    Each ``rho_ij`` is computed from the squared-theta product and, as a
    cross-check, from :func:`torus_resultant` on the divisors translated by
    ``z0``; ``rho_11 = rho_22`` and ``rho_12 = rho_21`` are enforced.
    """
    a = [complex(a1), complex(a2)]
    b = [complex(b1), complex(b2)]
    z0 = complex(z0)
    for p, q, what in ((a[0], a[1], "a1 +- a2"), (b[0], b[1], "b1 +- b2")):
        if _same_mod_lattice(p, q, M) or _same_mod_lattice(p, -q, M):
            raise ValueError(f"{what} lies in the lattice")
    for p in a:
        for q in b:
            if _same_mod_lattice(p, q, M) or _same_mod_lattice(p, -q, M):
                raise ValueError("some a_i +- b_j lies in the lattice")
    rho = {}
    for i in (0, 1):
        for j in (0, 1):
            ip, jp = 1 - i, 1 - j
            r1 = _rho_theta(a[i], a[ip], b[j], b[jp], M)
            f = TorusDivisorPair((z0 + a[i], z0 - a[i]), (z0 + b[j], z0 - b[j]))
            g = TorusDivisorPair((z0 + b[jp], z0 - b[jp]), (z0 + a[ip], z0 - a[ip]))
            r2 = torus_resultant(f, g, M)
            if abs(r1 - r2) > tol * max(1.0, abs(r1)):
                raise ArithmeticError(f"theta form and resultant disagree for rho_{i + 1}{j + 1}")
            rho[i, j] = r1
    xi1, xi2 = rho[0, 0], rho[0, 1]
    scale = max(1.0, abs(xi1), abs(xi2))
    if abs(rho[1, 1] - xi1) > tol * scale or abs(rho[1, 0] - xi2) > tol * scale:
        raise ArithmeticError("rho_11 != rho_22 or rho_12 != rho_21")
    deviation = abs((1 - xi1 - xi2) ** 2 - 4 * xi1 * xi2)
    return xi1, xi2, deviation


def xi_printed_residual(xi1, xi2) -> complex:
    """``(1 - xi1)^2 + (1 - xi2)^2 - 2 xi1 xi2``; equals 1 whenever the
    square-root relation holds, so this form is off by a constant."""
    return (1 - xi1) ** 2 + (1 - xi2) ** 2 - 2 * xi1 * xi2
