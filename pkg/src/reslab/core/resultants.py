"""Classical resultants of polynomials.

Every determinant formula here is normalized to the Poisson product

    Res(f, g) = f_m^n * prod_i g(a_i) = f_m^n g_n^m * prod_{i,j} (a_i - c_j),

where ``a_i`` are the roots of ``f`` (degree ``m``) and ``c_j`` those of ``g``
(degree ``n``).
"""
from __future__ import annotations

from .poly import BivariatePolynomial, Polynomial, interpolate_bivariate
from .rational import ComplexRational, as_cq, det_exact

__all__ = [
    "poisson_resultant",
    "sylvester_matrix",
    "sylvester_resultant",
    "bezout_matrix",
    "bezout_resultant",
    "taylor_coeffs",
    "toeplitz_resultant",
    "discriminant_pol",
    "reciprocal_poly",
    "pencil_resultant",
]

_ZERO = ComplexRational.ZERO
_ONE = ComplexRational.ONE


def _require_nonzero(*polys):
    for p in polys:
        if p.is_zero():
            raise ValueError("resultant of the zero polynomial is undefined")


def poisson_resultant(lead_f, roots_f, lead_g, roots_g) -> ComplexRational:
    """Resultant from factored data; the sign reference for every other route."""
    lf, lg = as_cq(lead_f), as_cq(lead_g)
    m, n = len(roots_f), len(roots_g)
    value = lf ** n * lg ** m
    for a in roots_f:
        a = as_cq(a)
        for c in roots_g:
            value = value * (a - as_cq(c))
    return value


def sylvester_matrix(f: Polynomial, g: Polynomial, m: int | None = None, n: int | None = None):
    """Sylvester matrix with rows of descending coefficients.

    ``m`` and ``n`` are formal degrees; leading zeros are allowed, which makes
    the determinant a polynomial function of the coefficients.
    """
    m = f.degree if m is None else m
    n = g.degree if n is None else n
    fc = f.padded(m)[::-1]
    gc = g.padded(n)[::-1]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([_ZERO] * i + fc + [_ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([_ZERO] * i + gc + [_ZERO] * (size - n - 1 - i))
    return rows


def sylvester_resultant(f: Polynomial, g: Polynomial, m: int | None = None, n: int | None = None):
    """Determinant of the Sylvester matrix; equals the Poisson product."""
    _require_nonzero(f, g)
    return det_exact(sylvester_matrix(f, g, m, n))


def bezout_matrix(f: Polynomial, g: Polynomial):
    """Coefficients beta_ij of (f(z)g(w) - f(w)g(z)) / (z - w) for equal degrees."""
    n = max(f.degree, g.degree)
    fc, gc = f.padded(n), g.padded(n)
    beta = [[_ZERO] * n for _ in range(n)]
    # (z^p w^q - z^q w^p)/(z - w) for p > q equals sum_{k=0}^{p-q-1} z^{q+k} w^{p-1-k}
    for p in range(n + 1):
        for q in range(p):
            c = fc[p] * gc[q] - fc[q] * gc[p]
            if c.is_zero():
                continue
            for k in range(p - q):
                i, j = q + k, p - 1 - k
                beta[i][j] = beta[i][j] + c
    return beta


def _padding_point(g: Polynomial) -> ComplexRational:
    t = 0
    while g(as_cq(t)).is_zero():
        t += 1
    return as_cq(t)


def bezout_resultant(f: Polynomial, g: Polynomial) -> ComplexRational:
    """Resultant as the determinant of the Bezoutian.

    For equal degrees n, ``det(beta) = (-1)^(n(n-1)/2) Res(f, g)``.  A lower
    degree ``f`` is first completed to degree ``deg g`` by a factor
    ``(z - t)^k`` with ``g(t) != 0``; multiplicativity then removes
    ``g(t)^k`` again.  The case ``deg f > deg g`` uses skew-symmetry.
    """
    _require_nonzero(f, g)
    m, n = f.degree, g.degree
    if m > n:
        return bezout_resultant(g, f) * (-1) ** (m * n)
    k = n - m
    correction = _ONE
    if k:
        t = _padding_point(g)
        f = f * Polynomial([-t, 1]) ** k
        correction = g(t) ** k
    if n == 0:
        return _ONE
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return det_exact(bezout_matrix(f, g)) * sign / correction


def taylor_coeffs(f: Polynomial, g: Polynomial, count: int):
    """First ``count`` Taylor coefficients of f/g at 0 by power-series division."""
    g0 = g.coeff(0)
    if g0.is_zero():
        raise ValueError("g(0) = 0: f/g has no Taylor expansion at 0")
    inv = g0.inverse()
    h = []
    for k in range(count):
        acc = f.coeff(k)
        for j in range(1, min(k, g.degree) + 1):
            acc = acc - g.coeff(j) * h[k - j]
        h.append(acc * inv)
    return h


def toeplitz_resultant(f: Polynomial, g: Polynomial, N: int) -> ComplexRational:
    """``f_m^(n-N) g_0^(m+N) det t_{m,N}(h)`` with ``h = f/g`` at 0 and
    ``t_{m,N}(h)_{ij} = h_{m+i-j}``, valid for ``N >= deg g``."""
    _require_nonzero(f, g)
    m, n = f.degree, g.degree
    if N < n:
        raise ValueError(f"N = {N} is below deg g = {n}")
    h = taylor_coeffs(f, g, m + N)

    def coeff(k):
        return h[k] if k >= 0 else _ZERO

    mat = [[coeff(m + i - j) for j in range(N)] for i in range(N)]
    return f.lc ** (n - N) * g.coeff(0) ** (m + N) * det_exact(mat)


def discriminant_pol(f: Polynomial) -> ComplexRational:
    """``prod_{i<j} (a_i - a_j)^2`` of the roots of ``f``.

    A non-monic input is divided by its leading coefficient first, so the
    result depends only on the roots.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("discriminant needs a polynomial of degree >= 1")
    f = f.monic()
    m = f.degree
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sylvester_resultant(f, f.derivative(), m, m - 1) * sign


def reciprocal_poly(P: Polynomial, degree: int | None = None) -> Polynomial:
    """``z^deg P * conj(P)(1/z)``; ``degree`` overrides the formal degree."""
    if P.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    return P.conj().reversed(degree)


def pencil_resultant(p0: Polynomial, p1: Polynomial, q0: Polynomial, q1: Polynomial,
                     nodes=None) -> BivariatePolynomial:
    """``S(s, t) = Res_zeta(p0 + s p1, q0 + t q1)`` as an exact bivariate polynomial.

    Formal degrees ``M = max(deg p0, deg p1)`` and ``N = max(deg q0, deg q1)``
    are used at every node, so specialising the Sylvester determinant is
    exact even where a leading coefficient vanishes.  ``deg_s S <= N`` and
    ``deg_t S <= M``; S is recovered by tensor interpolation.
    """
    def fdeg(a, b):
        return max(0, a.degree if not a.is_zero() else 0, b.degree if not b.is_zero() else 0)

    M, N = fdeg(p0, p1), fdeg(q0, q1)
    if nodes is None:
        snodes = [as_cq(k) for k in range(N + 1)]
        tnodes = [as_cq(k) for k in range(M + 1)]
    else:
        snodes, tnodes = nodes
    if M + N == 0:
        return BivariatePolynomial([[_ONE]])
    values = []
    for s in snodes:
        F = p0 + p1 * s
        row = []
        for t in tnodes:
            G = q0 + q1 * t
            row.append(det_exact(sylvester_matrix(F, G, M, N)))
        values.append(row)
    return interpolate_bivariate(snodes, tnodes, values)
