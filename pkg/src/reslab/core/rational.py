"""Exact Gaussian rationals and exact linear algebra over them.

A :class:`ComplexRational` is stored as three Python integers ``(a, b, d)``
meaning ``(a + b*i) / d`` with ``d > 0`` and ``gcd(a, b, d) == 1``.  Keeping a
single common denominator makes multiplication and Bareiss elimination much
cheaper than a pair of :class:`fractions.Fraction` objects.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "ComplexRational",
    "as_cq",
    "det_exact",
    "inverse_exact",
    "solve_exact",
    "format_fraction",
    "parse_fraction",
]


def parse_fraction(text) -> Fraction:
    """Parse ``"p/q"``, ``"-3"``, ``"0.25"`` or a number into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(text, (int, Rational)):
        return Fraction(text)
    if isinstance(text, float):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"cannot interpret {text!r} as a rational number")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class ComplexRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, ComplexRational) and im == 0:
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        if isinstance(re, complex):
            if im != 0:
                raise TypeError("complex real part with extra imaginary part")
            re, im = re.real, re.imag
        x = parse_fraction(re)
        y = parse_fraction(im)
        d = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        a = x.numerator * (d // x.denominator)
        b = y.numerator * (d // y.denominator)
        self._a, self._b, self._d = a, b, d
        self._reduce()

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> "ComplexRational":
        obj = object.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj._a, obj._b, obj._d = a, b, d
        return obj

    def _reduce(self):
        a, b, d = self._a, self._b, self._d
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d

    # -- accessors ---------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """The reduced integer triple ``(a, b, d)``."""
        return self._a, self._b, self._d

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self):
        return not self.is_zero()

    def conj(self) -> "ComplexRational":
        return ComplexRational._make(self._a, -self._b, self._d)

    def abs2(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    def __abs__(self) -> float:
        return abs(complex(self))

    # -- arithmetic --------------------------------------------------------
    def __neg__(self):
        return ComplexRational._make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return _float_fallback(self, other, lambda x, y: x + y)
        if o._d == self._d:
            return ComplexRational._make(self._a + o._a, self._b + o._b, self._d)
        return ComplexRational._make(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return _float_fallback(self, other, lambda x, y: x - y)
        if o._d == self._d:
            return ComplexRational._make(self._a - o._a, self._b - o._b, self._d)
        return ComplexRational._make(
            self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d
        )

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return _float_fallback(self, other, lambda x, y: y - x)
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return _float_fallback(self, other, lambda x, y: x * y)
        a, b, c, e = self._a, self._b, o._a, o._b
        if b == 0 and e == 0:
            return ComplexRational._make(a * c, 0, self._d * o._d)
        return ComplexRational._make(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexRational":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # d / (a + bi) = d (a - bi) / n
        return ComplexRational._make(d * a, -d * b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return _float_fallback(self, other, lambda x, y: x / y)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return _float_fallback(self, other, lambda x, y: y / x)
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return complex(self) ** k
        if k < 0:
            return self.inverse() ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison and hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        o = _coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return self == o

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        if self._b == 0:
            return f"CQ({format_fraction(self.re)})"
        return f"CQ({format_fraction(self.re)}, {format_fraction(self.im)})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        return {"re": format_fraction(self.re), "im": format_fraction(self.im)}

    @classmethod
    def from_json(cls, obj) -> "ComplexRational":
        if isinstance(obj, dict):
            return cls(obj.get("re", 0), obj.get("im", 0))
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return cls(obj[0], obj[1])
        return cls(obj)


_ONE = ComplexRational._make(1, 0, 1)
_ZERO = ComplexRational._make(0, 0, 1)
ComplexRational.ONE = _ONE
ComplexRational.ZERO = _ZERO
ComplexRational.I = ComplexRational._make(0, 1, 1)


def _coerce(x):
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return ComplexRational._make(x, 0, 1)
    if isinstance(x, Fraction):
        return ComplexRational._make(x.numerator, 0, x.denominator)
    return None


def _float_fallback(self, other, op):
    if isinstance(other, (float, complex)):
        return op(complex(self), other)
    if hasattr(other, "dtype"):
        return op(complex(self), other)
    return NotImplemented


def as_cq(x) -> ComplexRational:
    """Convert ints, Fractions, ``"p/q"`` strings, floats (exactly) or
    ``{"re", "im"}`` mappings to :class:`ComplexRational`."""
    if isinstance(x, ComplexRational):
        return x
    c = _coerce(x)
    if c is not None:
        return c
    if isinstance(x, complex):
        return ComplexRational(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, dict):
        return ComplexRational.from_json(x)
    return ComplexRational(x)


# -- exact linear algebra ---------------------------------------------------

def _gauss_int_rows(matrix):
    """Scale every row to Gaussian integers; return (re, im, scale) where
    scale is the product of the row multipliers."""
    re_rows, im_rows = [], []
    scale = 1
    for row in matrix:
        lcm = 1
        for x in row:
            d = x._d
            if d != 1:
                lcm = lcm * d // gcd(lcm, d)
        re_rows.append([x._a * (lcm // x._d) for x in row])
        im_rows.append([x._b * (lcm // x._d) for x in row])
        scale *= lcm
    return re_rows, im_rows, scale


def det_exact(matrix) -> ComplexRational:
    """Determinant by fraction-free Bareiss elimination over Z[i].

    Rows are first cleared of denominators, so every intermediate entry is a
    Gaussian integer and each Bareiss division is exact.
    """
    n = len(matrix)
    if n == 0:
        return _ONE
    rows = [[as_cq(x) for x in row] for row in matrix]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    R, I, scale = _gauss_int_rows(rows)
    sign = 1
    pr, pi = 1, 0  # previous pivot
    for k in range(n - 1):
        if R[k][k] == 0 and I[k][k] == 0:
            for s in range(k + 1, n):
                if R[s][k] != 0 or I[s][k] != 0:
                    R[k], R[s] = R[s], R[k]
                    I[k], I[s] = I[s], I[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        kr, ki = R[k][k], I[k][k]
        norm = pr * pr + pi * pi
        Rk, Ik = R[k], I[k]
        for i in range(k + 1, n):
            Ri, Ii = R[i], I[i]
            ar, ai = Ri[k], Ii[k]
            for j in range(k + 1, n):
                # (M_ij M_kk - M_ik M_kj) / prev
                xr = Ri[j] * kr - Ii[j] * ki - (ar * Rk[j] - ai * Ik[j])
                xi = Ri[j] * ki + Ii[j] * kr - (ar * Ik[j] + ai * Rk[j])
                if norm == 1 and pi == 0:
                    Ri[j], Ii[j] = xr * pr, xi * pr
                else:
                    Ri[j] = (xr * pr + xi * pi) // norm
                    Ii[j] = (xi * pr - xr * pi) // norm
            Ri[k] = Ii[k] = 0
        pr, pi = kr, ki
    return ComplexRational._make(sign * R[n - 1][n - 1], sign * I[n - 1][n - 1], scale)


def solve_exact(matrix, rhs):
    """Solve ``matrix @ X = rhs`` exactly by Gauss-Jordan elimination.

    ``rhs`` is a list of rows (a matrix); returns X as a list of rows.
    """
    n = len(matrix)
    aug = [[as_cq(x) for x in row] + [as_cq(x) for x in rrow] for row, rrow in zip(matrix, rhs)]
    width = len(aug[0]) if aug else 0
    for k in range(n):
        piv = next((s for s in range(k, n) if not aug[s][k].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = aug[k][k].inverse()
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and not aug[i][k].is_zero():
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return [row[n:width] for row in aug]


def inverse_exact(matrix):
    n = len(matrix)
    ident = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    return solve_exact(matrix, ident)
