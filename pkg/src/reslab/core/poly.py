"""Dense univariate and bivariate polynomials over :class:`ComplexRational`."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .rational import ComplexRational, as_cq

__all__ = [
    "NEG_INF",
    "Polynomial",
    "BivariatePolynomial",
    "poly_gcd",
    "interpolate",
    "interpolate_bivariate",
]

_ZERO = ComplexRational.ZERO
_ONE = ComplexRational.ONE


class _NegInf:
    """Degree of the zero polynomial.  Compares below every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __repr__(self):
        return "NEG_INF"

    def __add__(self, other):
        raise TypeError("NEG_INF takes no part in degree arithmetic")

    __radd__ = __sub__ = __rsub__ = __add__


NEG_INF = _NegInf()


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Dense polynomial, coefficients in ascending degree order."""

    __slots__ = ("coeffs", "_carr")

    def __init__(self, coeffs=()):
        self.coeffs = _trim([as_cq(c) for c in coeffs])
        self._carr = None

    @classmethod
    def _from_cq(cls, coeffs) -> "Polynomial":
        obj = object.__new__(cls)
        obj.coeffs = _trim(coeffs)
        obj._carr = None
        return obj

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls._from_cq([as_cq(c)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls._from_cq([_ZERO] * k + [as_cq(c)])

    @classmethod
    def from_roots(cls, roots, lead=1) -> "Polynomial":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls._from_cq([-as_cq(r), _ONE])
        return p

    # -- basic properties --------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> ComplexRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> ComplexRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def padded(self, n: int):
        """Coefficient list of length ``n + 1`` (formal degree ``n``)."""
        if len(self.coeffs) > n + 1:
            raise ValueError(f"degree {self.degree} exceeds formal degree {n}")
        return list(self.coeffs) + [_ZERO] * (n + 1 - len(self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, ComplexRational)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            coef = str(c)
            if not c.is_real() and c.re != 0:
                coef = f"({coef})"
            terms.append(coef if not mono else (mono if c == 1 else f"{coef}*{mono}"))
        return "Polynomial(" + " + ".join(terms) + ")"

    # -- arithmetic --------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other)

    def __add__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._from_cq(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_cq([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_cq(other)
            return Polynomial._from_cq([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial._from_cq(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divrem(self, other: "Polynomial"):
        """Quotient and remainder of exact long division."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dv = other.coeffs
        n = len(dv) - 1
        if len(rem) - 1 < n:
            return Polynomial(), self
        inv = dv[-1].inverse()
        quot = [_ZERO] * (len(rem) - n)
        for k in range(len(rem) - 1 - n, -1, -1):
            c = rem[k + n] * inv
            quot[k] = c
            if c.is_zero():
                continue
            for j in range(n + 1):
                rem[k + j] = rem[k + j] - c * dv[j]
        return Polynomial._from_cq(quot), Polynomial._from_cq(rem[:n])

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> "Polynomial":
        return self * self.lc.inverse()

    def derivative(self) -> "Polynomial":
        return Polynomial._from_cq([c * k for k, c in enumerate(self.coeffs)][1:])

    def conj(self) -> "Polynomial":
        """Conjugate every coefficient."""
        return Polynomial._from_cq([c.conj() for c in self.coeffs])

    def reversed(self, n: int | None = None) -> "Polynomial":
        """Coefficients of ``z^n p(1/z)`` for formal degree ``n``."""
        n = self.degree if n is None else n
        return Polynomial._from_cq(self.padded(n)[::-1])

    def shift_power(self, k: int) -> "Polynomial":
        """Multiply by ``z^k``."""
        return Polynomial._from_cq([_ZERO] * k + list(self.coeffs))

    def compose(self, other: "Polynomial") -> "Polynomial":
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    # -- evaluation --------------------------------------------------------
    def to_array(self) -> np.ndarray:
        """Ascending complex128 coefficient array (cached)."""
        if self._carr is None:
            arr = np.array([complex(c) for c in self.coeffs], dtype=np.complex128)
            arr.setflags(write=False)
            self._carr = arr
        return self._carr

    def __call__(self, x):
        if isinstance(x, (ComplexRational, int, Fraction)):
            x = as_cq(x)
            acc = _ZERO
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        arr = self.to_array()
        if not len(arr):
            return np.zeros_like(np.asarray(x, dtype=np.complex128)) if np.ndim(x) else 0j
        return np.polyval(arr[::-1], x)

    def multiplicity(self, a) -> int:
        """Exact multiplicity of the root ``a``."""
        if self.is_zero():
            raise ValueError("zero polynomial has roots of infinite multiplicity")
        a = as_cq(a)
        lin = Polynomial._from_cq([-a, _ONE])
        k = 0
        p = self
        while True:
            q, r = p.divrem(lin)
            if not r.is_zero():
                return k
            p, k = q, k + 1

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "Polynomial":
        if isinstance(obj, dict):
            obj = obj["coeffs"]
        return cls([ComplexRational.from_json(c) for c in obj])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (gcd(0, 0) is the zero polynomial)."""
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
    if a.is_zero():
        return a
    return a.monic()


def interpolate(nodes, values) -> Polynomial:
    """Exact Newton interpolation through ``(nodes[i], values[i])``."""
    xs = [as_cq(x) for x in nodes]
    table = [as_cq(v) for v in values]
    n = len(xs)
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        coef.append(table[0])
    poly = Polynomial()
    for k in range(n - 1, -1, -1):
        poly = poly * Polynomial._from_cq([-xs[k], _ONE]) + coef[k]
    return poly


class BivariatePolynomial:
    """Dense polynomial in ``(z, w)``; ``coeffs[i][j]`` multiplies ``z^i w^j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        rows = [[as_cq(c) for c in row] for row in coeffs]
        width = max((len(r) for r in rows), default=0)
        rows = [r + [_ZERO] * (width - len(r)) for r in rows]
        while rows and all(c.is_zero() for c in rows[-1]):
            rows.pop()
        while rows and rows[0] and all(r[-1].is_zero() for r in rows):
            rows = [r[:-1] for r in rows]
        if rows and not rows[0]:
            rows = []
        self.coeffs = tuple(tuple(r) for r in rows)

    @property
    def deg_z(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def deg_w(self):
        return len(self.coeffs[0]) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int, j: int) -> ComplexRational:
        if 0 <= i < len(self.coeffs) and 0 <= j < len(self.coeffs[0]):
            return self.coeffs[i][j]
        return _ZERO

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BivariatePolynomial(deg_z={self.deg_z}, deg_w={self.deg_w})"

    def scale(self, c) -> "BivariatePolynomial":
        c = as_cq(c)
        return BivariatePolynomial([[x * c for x in row] for row in self.coeffs])

    def __sub__(self, other):
        nz = max(len(self.coeffs), len(other.coeffs))
        nw = max(self.deg_w if self.coeffs else -1, other.deg_w if other.coeffs else -1) + 1
        return BivariatePolynomial(
            [[self.coeff(i, j) - other.coeff(i, j) for j in range(nw)] for i in range(nz)]
        )

    def transpose(self) -> "BivariatePolynomial":
        if not self.coeffs:
            return self
        return BivariatePolynomial([list(col) for col in zip(*self.coeffs)])

    def conj_transpose(self) -> "BivariatePolynomial":
        if not self.coeffs:
            return self
        return BivariatePolynomial([[c.conj() for c in col] for col in zip(*self.coeffs)])

    def row(self, i: int) -> Polynomial:
        """Coefficient of ``z^i`` as a polynomial in ``w``."""
        if 0 <= i < len(self.coeffs):
            return Polynomial._from_cq(list(self.coeffs[i]))
        return Polynomial()

    def column(self, j: int) -> Polynomial:
        """Coefficient of ``w^j`` as a polynomial in ``z``."""
        if self.coeffs and 0 <= j < len(self.coeffs[0]):
            return Polynomial._from_cq([r[j] for r in self.coeffs])
        return Polynomial()

    def to_array(self) -> np.ndarray:
        return np.array([[complex(c) for c in row] for row in self.coeffs], dtype=np.complex128).reshape(
            len(self.coeffs), -1 if self.coeffs else 0
        )

    def __call__(self, z, w):
        if all(isinstance(v, (ComplexRational, int, Fraction)) for v in (z, w)):
            z, w = as_cq(z), as_cq(w)
            acc = _ZERO
            for row in reversed(self.coeffs):
                inner = _ZERO
                for c in reversed(row):
                    inner = inner * w + c
                acc = acc * z + inner
            return acc
        arr = self.to_array()
        z = np.asarray(z, dtype=np.complex128)
        w = np.asarray(w, dtype=np.complex128)
        acc = np.zeros(np.broadcast(z, w).shape, dtype=np.complex128)
        for row in arr[::-1]:
            inner = np.zeros_like(acc)
            for c in row[::-1]:
                inner = inner * w + c
            acc = acc * z + inner
        return acc[()] if acc.ndim == 0 else acc

    def substitute(self, zpoly: Polynomial, wpoly: Polynomial, zden: Polynomial, wden: Polynomial,
                   nz: int, nw: int) -> Polynomial:
        """``zden^nz * wden^nw * Q(zpoly/zden, wpoly/wden)`` as a polynomial.

        ``nz`` and ``nw`` must be at least the z- and w-degrees of ``self``.
        """
        zp = [zpoly ** i * zden ** (nz - i) for i in range(nz + 1)]
        wp = [wpoly ** j * wden ** (nw - j) for j in range(nw + 1)]
        out = Polynomial()
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if not c.is_zero():
                    out = out + zp[i] * wp[j] * c
        return out

    def to_json(self):
        return [[c.to_json() for c in row] for row in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "BivariatePolynomial":
        return cls([[ComplexRational.from_json(c) for c in row] for row in obj])


def interpolate_bivariate(znodes, wnodes, values) -> BivariatePolynomial:
    """Tensor-grid interpolation: ``values[i][j]`` is the value at
    ``(znodes[i], wnodes[j])``."""
    # interpolate along w for each z node, then along z for each w-coefficient
    rows = [interpolate(wnodes, values[i]).padded(len(wnodes) - 1) for i in range(len(znodes))]
    cols = []
    for j in range(len(wnodes)):
        cols.append(interpolate(znodes, [rows[i][j] for i in range(len(znodes))]).padded(len(znodes) - 1))
    return BivariatePolynomial([[cols[j][i] for j in range(len(wnodes))] for i in range(len(znodes))])

