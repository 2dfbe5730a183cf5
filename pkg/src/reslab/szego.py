"""Toeplitz determinants, Day's formula and the Szego route to resultants.

Symbols live on the unit circle.  A rational symbol with simple, exactly
known poles gets exact Fourier coefficients by residues; anything else goes
through an FFT that is refined until two consecutive sizes agree.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .core import ComplexRational, det_exact
from .divisors import INFINITY, RationalFunction, divisor_of
from .identities import splitting_resultant, subsets

__all__ = [
    "CircleError",
    "SymbolCoeffs",
    "LogCoeffs",
    "fourier_coeffs",
    "fourier_coeffs_residue",
    "fourier_coeffs_fft",
    "toeplitz_det",
    "DAY_WEIGHT",
    "day_formula",
    "calibrate_day_weight",
    "log_coeffs",
    "szego_resultant",
    "szego_sequence",
    "cauchy_schur_resultant",
]

CIRCLE_GAP = 1e-9


class CircleError(ValueError):
    """A pole (or zero, where it matters) sits on the unit circle."""


@dataclass(frozen=True)
class SymbolCoeffs:
    """Fourier coefficients ``h_k`` for ``|k| <= K``.

    ``rho`` and ``C`` certify the tail: ``|h_k| <= C rho^|k|``.
    """

    coeffs: dict
    K: int
    exact: bool = False
    rho: float = 0.0
    C: float = 0.0

    def __getitem__(self, k: int):
        if abs(k) > self.K:
            raise IndexError(f"coefficient {k} outside the window [-{self.K}, {self.K}]")
        return self.coeffs.get(k, ComplexRational.ZERO if self.exact else 0j)

    def as_array(self) -> np.ndarray:
        """Complex coefficients ordered from ``-K`` to ``K``."""
        return np.array([complex(self[k]) for k in range(-self.K, self.K + 1)])


@dataclass(frozen=True)
class LogCoeffs:
    """Coefficients ``s_k`` of ``Log h`` on the circle; ``s_0`` uses the
    principal branch of ``Log(f(inf)/g(0))``."""

    coeffs: dict = field(default_factory=dict)
    K: int = 0
    branch: str = "principal"

    def __getitem__(self, k: int) -> complex:
        if abs(k) > self.K:
            raise IndexError(f"coefficient {k} outside the window [-{self.K}, {self.K}]")
        return self.coeffs.get(k, 0j)


# -- Fourier coefficients ----------------------------------------------------

def _pole_data(h: RationalFunction):
    D = divisor_of(h)
    poles = [(p, -k) for p, k in D.items() if p is not INFINITY and k < 0]
    for p, _ in poles:
        if abs(abs(complex(p)) - 1.0) <= CIRCLE_GAP:
            raise CircleError(f"pole {complex(p)} lies on the unit circle")
    return D, poles


def _tail_certificate(poles, h: RationalFunction):
    """``(rho, C)`` with ``|h_k| <= C rho^|k|`` for every ``k``."""
    if not poles:
        q = h.num.divrem(h.den)[0]
        return 0.0, max((abs(complex(c)) for c in q.coeffs), default=0.0)
    if any(m > 1 for _, m in poles):
        return _cauchy_certificate(poles, h)
    rho = max(min(abs(complex(p)), 1.0 / abs(complex(p))) for p, _ in poles)
    # |h_k| <= sum |r_b| / |b| * rate_b^|k| from the partial fractions
    C = 0.0
    den_d = h.den.derivative()
    for p, _ in poles:
        pc = complex(p)
        r = abs(complex(h.num(pc) / den_d(pc)))
        C += r / abs(pc) if abs(pc) > 0 else r
    # the polynomial part of h only touches h_0 .. h_deg q
    q = h.num.divrem(h.den)[0]
    if not q.is_zero():
        C += max(abs(complex(c)) / rho ** k for k, c in enumerate(q.coeffs))
    return rho, C


def _cauchy_certificate(poles, h: RationalFunction, samples: int = 4096):
    """Cauchy estimates on circles halfway (in log radius) between the unit
    circle and the nearest pole on each side; the sampled maximum is padded
    by 1% to cover values between samples."""
    mods = [abs(complex(p)) for p, _ in poles]
    inner = [r for r in mods if r < 1]
    outer = [r for r in mods if r > 1]
    r_in = math.sqrt(max(inner)) if inner else 0.5
    r_out = math.sqrt(min(outer)) if outer else 2.0
    u = np.exp(2j * np.pi * np.arange(samples) / samples)
    M = max(np.max(np.abs(h(r_in * u))), np.max(np.abs(h(r_out * u)))) * 1.01
    return max(r_in, 1.0 / r_out), float(M)


def fourier_coeffs_residue(h: RationalFunction, K: int) -> SymbolCoeffs:
    """Residue-sum coefficients for simple poles.

    With ``h = q + sum r/(z - b)``: a pole inside the disk gives
    ``h_{-k} += r b^(k-1)`` (``k >= 1``), a pole outside gives
    ``h_k += -r b^(-k-1)`` (``k >= 0``); the polynomial part ``q`` adds to
    ``h_k`` for ``k >= 0``.  Exact when the poles are exact.
    """
    D, poles = _pole_data(h)
    if any(m != 1 for _, m in poles):
        raise ValueError("residue route needs simple poles")
    exact = not D.numeric
    q, rem = h.num.divrem(h.den)
    den_d = h.den.derivative()
    zero = ComplexRational.ZERO if exact else 0j
    out = {k: zero for k in range(-K, K + 1)}
    for k in range(0, min(K, q.degree) + 1) if not q.is_zero() else ():
        out[k] = out[k] + (q.coeff(k) if exact else complex(q.coeff(k)))
    for b, _ in poles:
        if exact:
            r = rem(b) / den_d(b)
        else:
            b = complex(b)
            r = complex(rem(b) / den_d(b))
        inside = abs(complex(b)) < 1
        if inside:
            if b == 0 or (not exact and b == 0j):
                out[-1] = out[-1] + r
                continue
            power = r
            for k in range(1, K + 1):
                out[-k] = out[-k] + power
                power = power * b
        else:
            inv = (1 / b) if not exact else b.inverse()
            power = -r * inv
            for k in range(0, K + 1):
                out[k] = out[k] + power
                power = power * inv
    rho, C = _tail_certificate(poles, h)
    return SymbolCoeffs(out, K, exact, rho, C)


def fourier_coeffs_fft(h: RationalFunction, K: int, tol: float = 1e-12, start: int = 4096,
                       max_size: int = 1 << 22) -> SymbolCoeffs:
    """FFT coefficients, doubling the sample count until two consecutive
    sizes agree to ``tol`` on the window."""
    _, poles = _pole_data(h)
    n = max(start, 1 << int(math.ceil(math.log2(4 * K + 4))))
    prev = None
    while n <= max_size:
        theta = 2 * np.pi * np.arange(n) / n
        vals = h(np.exp(1j * theta))
        c = np.fft.fft(vals) / n
        window = np.array([c[k % n] for k in range(-K, K + 1)])
        if prev is not None and np.max(np.abs(window - prev)) <= tol:
            rho, C = _tail_certificate(poles, h)
            return SymbolCoeffs({k: complex(window[k + K]) for k in range(-K, K + 1)}, K, False, rho, C)
        prev = window
        n *= 2
    raise ArithmeticError("FFT coefficients did not settle; a pole is too close to the circle")


def fourier_coeffs(h: RationalFunction, K: int) -> SymbolCoeffs:
    """Residue route when every pole is simple, FFT route otherwise."""
    _, poles = _pole_data(h)
    if all(m == 1 for _, m in poles):
        return fourier_coeffs_residue(h, K)
    return fourier_coeffs_fft(h, K)


def toeplitz_det(h: SymbolCoeffs, N: int):
    """``det (h_{i-j})_{1<=i,j<=N}``; exact Bareiss for exact coefficients,
    LU with partial pivoting otherwise."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N == 0:
        return ComplexRational.ONE if h.exact else 1 + 0j
    if h.K < N - 1:
        raise ValueError(f"window K={h.K} too small for N={N}")
    if h.exact:
        return det_exact([[h[i - j] for j in range(N)] for i in range(N)])
    T = np.array([[complex(h[i - j]) for j in range(N)] for i in range(N)])
    return complex(np.linalg.det(T))


# -- Day's formula -----------------------------------------------------------

#: Which splitting factor carries the N-th power in Day's formula, as fixed
#: by :func:`calibrate_day_weight` against brute-force Toeplitz determinants.
DAY_WEIGHT = "IJ"


def _day_data(h: RationalFunction):
    D = divisor_of(h)
    if INFINITY in D:
        raise ValueError("h must have equally many finite zeros and poles")
    if any(abs(k) != 1 for k in D.values()):
        raise ValueError("Day's formula needs simple zeros and poles")
    a, b = D.zeros(), D.poles()
    if any(complex(p) == 0 for p in a):
        raise ValueError("h(0) = 0")
    for p in b:
        if abs(abs(complex(p)) - 1.0) <= CIRCLE_GAP:
            raise CircleError(f"pole {complex(p)} lies on the unit circle")
    if D.numeric:
        a = [complex(p) for p in a]
        b = [complex(p) for p in b]
    J = tuple(j + 1 for j, p in enumerate(b) if abs(complex(p)) > 1)
    return a, b, J, h.lead_ratio


def _split_at_zero(a, b, I, J):
    """``h_IJ(0) = prod_{i in I} (-a_i) / prod_{j in J} (-b_j)``."""
    v = ComplexRational.ONE
    for i in I:
        v = v * (-a[i - 1])
    for j in J:
        v = v / (-b[j - 1])
    return v


def day_formula(h: RationalFunction, N: int, weight: str | None = None):
    """``det t_N(h) = lambda^N sum_I Res(h_IJ, 1/h_{I'J'}) w_I^N`` with
    ``J = {j : |b_j| > 1}`` and ``lambda`` the leading ratio of ``h``.

    ``weight="IJ"`` (the calibrated default) uses ``w_I = h_IJ(0)``;
    ``weight="I'J'"`` uses ``h_{I'J'}(0)``.
    """
    weight = weight or DAY_WEIGHT
    a, b, J, lead = _day_data(h)
    d, m = len(a), len(J)
    total = ComplexRational.ZERO
    for I in subsets(d, m):
        res = splitting_resultant(a, b, I, J)
        if weight == "IJ":
            w = _split_at_zero(a, b, I, J)
        elif weight == "I'J'":
            Ic = tuple(i for i in range(1, d + 1) if i not in I)
            Jc = tuple(j for j in range(1, d + 1) if j not in J)
            w = _split_at_zero(a, b, Ic, Jc)
        else:
            raise ValueError(f"unknown weight convention {weight!r}")
        total = total + res * w ** N
    return total * lead ** N


def calibrate_day_weight(symbols, Ns=range(1, 7), rtol: float = 1e-8) -> str:
    """Return the weight convention that reproduces ``toeplitz_det`` on every
    ``(symbol, N)`` pair; raise if none does."""
    conventions = ("IJ", "I'J'")
    ok = {c: True for c in conventions}
    for h in symbols:
        coeffs = fourier_coeffs(h, max(Ns))
        for N in Ns:
            ref = complex(toeplitz_det(coeffs, N))
            for c in conventions:
                if not ok[c]:
                    continue
                got = complex(day_formula(h, N, c))
                if abs(got - ref) > rtol * max(abs(ref), 1e-300):
                    ok[c] = False
    good = [c for c in conventions if ok[c]]
    if len(good) != 1:
        raise ArithmeticError(f"calibration inconclusive: {good}")
    return good[0]


# -- Szego route --------------------------------------------------------------

def _split_supports(f: RationalFunction, g: RationalFunction):
    Df, Dg = divisor_of(f), divisor_of(g)
    for p in Df:
        if p is INFINITY or abs(complex(p)) >= 1 - CIRCLE_GAP:
            raise ValueError("the divisor of f must lie in the open unit disk")
    for p in Dg:
        if p is not INFINITY and abs(complex(p)) <= 1 + CIRCLE_GAP:
            raise ValueError("the divisor of g must lie outside the closed unit disk")
    a = [complex(p) for p in Df.zeros()]
    b = [complex(p) for p in Df.poles()]
    c = [complex(p) for p in Dg.zeros() if p is not INFINITY]
    d = [complex(p) for p in Dg.poles() if p is not INFINITY]
    return a, b, c, d


def _decay(f, g):
    a, b, c, d = _split_supports(f, g)
    r_in = max([abs(x) for x in a + b], default=0.0)
    r_out = min([abs(x) for x in c + d], default=math.inf)
    q = r_in / r_out if r_out < math.inf else 0.0
    return (a, b, c, d), q


def log_coeffs(f: RationalFunction, g: RationalFunction, K: int) -> LogCoeffs:
    """Closed-form ``s_k`` of ``Log(f/g)`` on the circle:
    ``s_-k = (1/k) sum (b_i^k - a_i^k)`` and ``s_k = (1/k) sum (c_j^-k - d_j^-k)``
    for ``k >= 1``, ``s_0 = Log(f(inf)/g(0))``."""
    (a, b, c, d), _ = _decay(f, g)
    s = {0: cmath.log(complex(f.lead_ratio) / complex(g.value_at(0)))}
    for k in range(1, K + 1):
        s[-k] = (sum(x ** k for x in b) - sum(x ** k for x in a)) / k
        s[k] = (sum(x ** -k for x in c) - sum(x ** -k for x in d)) / k
    return LogCoeffs(s, K)


def _terms_needed(q: float, scale: float, tol: float) -> int:
    """Smallest K with ``scale q^(K+1) / (1 - q) < tol``."""
    if q == 0.0 or scale == 0.0:
        return 0
    K = 0
    while scale * q ** (K + 1) / (1 - q) >= tol:
        K += 1
    return K


def szego_resultant(f: RationalFunction, g: RationalFunction, tol: float = 1e-12):
    """``exp(sum_{k>=1} k s_k s_-k)`` truncated once the certified tail
    drops below ``tol/10``; the terms decay like ``q^k``, ``q = r_in/r_out``."""
    (a, b, c, d), q = _decay(f, g)
    # |k s_k s_-k| <= (#a + #b)(#c + #d) q^k
    K = _terms_needed(q, (len(a) + len(b)) * (len(c) + len(d)), tol / 10)
    s = log_coeffs(f, g, K)
    acc = 0j
    for k in range(1, K + 1):
        acc += k * s[k] * s[-k]
    return cmath.exp(acc)


def szego_sequence(f: RationalFunction, g: RationalFunction, Ns):
    """``(g(0)/f(inf))^N det t_N(f/g)`` for each N; converges to Res(f, g)."""
    h = f / g
    coeffs = fourier_coeffs(h, max(Ns))
    ratio = g.value_at(0) / f.lead_ratio
    out = []
    for N in Ns:
        det = toeplitz_det(coeffs, N)
        out.append(ratio ** N * det if coeffs.exact else complex(ratio) ** N * det)
    return out


def cauchy_schur_resultant(a, c, tol: float = 1e-12) -> complex:
    """``exp(-sum_{k>=1} k p_k(a) p_k(c))`` with ``p_k(x) = (1/k) sum x^k``;
    equals ``prod (1 - a_i c_j)``."""
    a = [complex(x) for x in a]
    c = [complex(x) for x in c]
    if any(abs(x) >= 1 for x in a + c):
        raise ValueError("all points must lie in the open unit disk")
    if not a or not c:
        return 1 + 0j
    q = max(abs(x) for x in a) * max(abs(x) for x in c)
    K = _terms_needed(q, len(a) * len(c), tol / 10)
    acc = 0j
    for k in range(1, K + 1):
        acc += sum(x ** k for x in a) * sum(x ** k for x in c) / k
    return cmath.exp(-acc)
