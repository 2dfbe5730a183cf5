"""Divisors on the Riemann sphere, rational functions, and local symbols."""
from __future__ import annotations

import enum
from collections.abc import Mapping
from fractions import Fraction

import numpy as np

from .core import ComplexRational, Polynomial, as_cq, poly_gcd, squarefree_factors
from .core.roots import _simple_roots

__all__ = [
    "INFINITY",
    "ZERO",
    "INFINITE",
    "Degenerate",
    "Admissibility",
    "IndeterminateError",
    "Divisor",
    "RationalFunction",
    "as_point",
    "divisor_of",
    "ord_at",
    "local_symbol",
    "is_admissible",
    "divisor_action",
]

POINT_TOL = 1e-9


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("reslab.INFINITY")

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class Degenerate(enum.Enum):
    """Resultant values forced by a common zero or pole."""

    ZERO = "ZERO"
    INFINITE = "INFINITE"

    def __repr__(self):
        return self.value


ZERO = Degenerate.ZERO
INFINITE = Degenerate.INFINITE


class Admissibility(str, enum.Enum):
    GENERIC = "generic"
    ADMISSIBLE_NONNEG = "admissible_nonneg"
    ADMISSIBLE_NONPOS = "admissible_nonpos"
    NOT_ADMISSIBLE = "not_admissible"

    @property
    def admissible(self) -> bool:
        return self is not Admissibility.NOT_ADMISSIBLE


class IndeterminateError(ArithmeticError):
    """A product met both a zero and a pole factor (0 * inf)."""


def as_point(x):
    """Normalize a point of the extended plane.

    ``"inf"``/INFINITY map to :data:`INFINITY`; Python floats and complex
    numbers stay numeric; everything else becomes a :class:`ComplexRational`.
    """
    if x is INFINITY or (isinstance(x, str) and x.strip().lower() in {"inf", "infinity", "∞"}):
        return INFINITY
    if isinstance(x, (float, complex, np.floating, np.complexfloating)):
        return complex(x)
    return as_cq(x)


def _is_exact(p) -> bool:
    return p is INFINITY or isinstance(p, ComplexRational)


def same_point(p, q, tol: float = POINT_TOL) -> bool:
    if p is INFINITY or q is INFINITY:
        return p is q
    if isinstance(p, ComplexRational) and isinstance(q, ComplexRational):
        return p == q
    cp, cq = complex(p), complex(q)
    return abs(cp - cq) <= tol * (1.0 + abs(cp))


def _point_json(p):
    if p is INFINITY:
        return "inf"
    if isinstance(p, ComplexRational):
        return p.to_json()
    return {"re": float(p.real), "im": float(p.imag)}


def _point_from_json(obj):
    if isinstance(obj, str) and obj.strip().lower() in {"inf", "infinity"}:
        return INFINITY
    if isinstance(obj, dict):
        re, im = obj.get("re", 0), obj.get("im", 0)
        if isinstance(re, float) or isinstance(im, float):
            return complex(re, im)
        return ComplexRational(re, im)
    return as_point(obj)


class Divisor(Mapping):
    """Finite map point -> nonzero integer multiplicity.

    ``numeric`` is set when some support point came out of a floating-point
    root finder; exact identities must not be asserted on such divisors.
    """

    __slots__ = ("_entries", "numeric")

    def __init__(self, entries=(), numeric: bool = False):
        acc: dict = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for p, k in items:
            p = as_point(p)
            k = int(k)
            for q in acc:
                if same_point(p, q):
                    p = q
                    break
            acc[p] = acc.get(p, 0) + k
        self._entries = {p: k for p, k in acc.items() if k != 0}
        self.numeric = bool(numeric) or any(not _is_exact(p) for p in self._entries)

    def __getitem__(self, p):
        return self._entries[p]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def mult(self, p) -> int:
        """Multiplicity at ``p`` (0 off the support), matching numeric points
        within :data:`POINT_TOL`."""
        p = as_point(p)
        if p in self._entries:
            return self._entries[p]
        for q, k in self._entries.items():
            if same_point(p, q):
                return k
        return 0

    def degree(self) -> int:
        return sum(self._entries.values())

    def support(self):
        return set(self._entries)

    def zeros(self):
        """Points of positive multiplicity, repeated by multiplicity."""
        return [p for p, k in self._entries.items() for _ in range(k) if k > 0]

    def poles(self):
        return [p for p, k in self._entries.items() for _ in range(-k) if k < 0]

    def finite(self) -> "Divisor":
        return Divisor({p: k for p, k in self._entries.items() if p is not INFINITY}, self.numeric)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self.items()) + list(other.items()), self.numeric or other.numeric)

    def __neg__(self) -> "Divisor":
        return Divisor({p: -k for p, k in self._entries.items()}, self.numeric)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({p: k * m for p, m in self._entries.items()}, self.numeric)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        if len(self) != len(other):
            return False
        return all(other.mult(p) == k for p, k in self.items())

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        body = ", ".join(f"{p!r}: {k:+d}" for p, k in self._entries.items())
        tag = " numeric" if self.numeric else ""
        return f"Divisor({{{body}}}{tag})"

    def to_json(self):
        return [{"point": _point_json(p), "mult": k} for p, k in self._entries.items()]

    @classmethod
    def from_json(cls, obj) -> "Divisor":
        return cls([(_point_from_json(e["point"]), int(e["mult"])) for e in obj])


class RationalFunction:
    """Reduced quotient ``num/den`` with a monic denominator.

    Functions built with :meth:`from_roots` remember their exact divisor.
    """

    __slots__ = ("num", "den", "_divisor")

    def __init__(self, num, den=None, *, _divisor: Divisor | None = None):
        num = num if isinstance(num, Polynomial) else Polynomial(num if isinstance(num, (list, tuple)) else [num])
        if den is None:
            den = Polynomial.constant(1)
        elif not isinstance(den, Polynomial):
            den = Polynomial(den if isinstance(den, (list, tuple)) else [den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Polynomial.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree >= 1:
                num, den = num.exact_div(g), den.exact_div(g)
        inv = den.lc.inverse()
        self.num = num * inv
        self.den = den * inv
        self._divisor = _divisor

    @classmethod
    def from_roots(cls, zeros=(), poles=(), lead=1) -> "RationalFunction":
        """``lead * prod (z - a) / prod (z - b)`` over finite exact points.

        Repeated points give multiplicities; common points cancel.
        """
        zeros = [as_cq(a) for a in zeros]
        poles = [as_cq(b) for b in poles]
        counts: dict = {}
        for a in zeros:
            counts[a] = counts.get(a, 0) + 1
        for b in poles:
            counts[b] = counts.get(b, 0) - 1
        num = Polynomial.from_roots([p for p, k in counts.items() for _ in range(max(k, 0))], lead)
        den = Polynomial.from_roots([p for p, k in counts.items() for _ in range(max(-k, 0))])
        inf = den.degree - num.degree
        entries = {p: k for p, k in counts.items() if k}
        if inf:
            entries[INFINITY] = inf
        return cls(num, den, _divisor=Divisor(entries))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def identity(cls) -> "RationalFunction":
        return cls(Polynomial([0, 1]))

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    @property
    def order(self) -> int:
        """Number of zeros (equivalently poles) counted on the sphere."""
        return max(self.num.degree if not self.num.is_zero() else 0, self.den.degree)

    @property
    def ord_infinity(self) -> int:
        return self.den.degree - self.num.degree

    @property
    def lead_ratio(self) -> ComplexRational:
        """``lc(num)/lc(den)``: the unit at infinity in the coordinate 1/z."""
        return self.num.lc / self.den.lc

    @property
    def exact_divisor(self) -> Divisor | None:
        return self._divisor

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"

    # -- arithmetic --------------------------------------------------------
    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction.constant(other)

    def _combined_divisor(self, other, sign):
        if self._divisor is None or other._divisor is None or self.is_zero() or other.is_zero():
            return None
        return self._divisor + (other._divisor if sign > 0 else -other._divisor)

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den, _divisor=self._combined_divisor(o, 1))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num, _divisor=self._combined_divisor(o, -1))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __add__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        d = self._divisor
        return RationalFunction(-self.num, self.den, _divisor=d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction.constant(1) / self ** (-k)
        d = self._divisor * k if self._divisor is not None else None
        return RationalFunction(self.num ** k, self.den ** k, _divisor=d)

    # -- evaluation --------------------------------------------------------
    def value_at(self, a):
        """Value at a point of the sphere: a number, or ZERO/INFINITE markers
        are never returned here; poles give :data:`INFINITE` and the value at
        INFINITY is a limit."""
        a = as_point(a)
        if a is INFINITY:
            o = self.ord_infinity
            if self.is_zero() or o > 0:
                return ComplexRational.ZERO
            if o < 0:
                return INFINITE
            return self.lead_ratio
        d = self.den(a)
        if (d == 0) if not isinstance(d, ComplexRational) else d.is_zero():
            return INFINITE
        return self.num(a) / d

    def __call__(self, a):
        if isinstance(a, np.ndarray):
            return self.num(a) / self.den(a)
        return self.value_at(a)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    # -- serialization -----------------------------------------------------
    def to_json(self):
        return {"num": self.num.to_json()["coeffs"], "den": self.den.to_json()["coeffs"]}

    @classmethod
    def from_json(cls, obj) -> "RationalFunction":
        """Accept ``{"num": [...], "den": [...]}`` or the factored form
        ``{"zeros": [...], "poles": [...], "lead": c}``."""
        if not isinstance(obj, dict):
            raise ValueError("rational function JSON must be an object")
        if "zeros" in obj or "poles" in obj:
            zeros = [_point_from_json(p) for p in obj.get("zeros", [])]
            poles = [_point_from_json(p) for p in obj.get("poles", [])]
            if any(p is INFINITY for p in zeros + poles):
                raise ValueError("factored form lists finite points only; infinity is implied")
            return cls.from_roots(zeros, poles, ComplexRational.from_json(obj.get("lead", 1)))
        if "num" not in obj:
            raise ValueError('rational function JSON needs "num" (and optionally "den")')
        num = Polynomial([ComplexRational.from_json(c) for c in obj["num"]])
        den = Polynomial([ComplexRational.from_json(c) for c in obj.get("den", [1])])
        return cls(num, den)


# -- divisors of functions ---------------------------------------------------

def _snap(x: complex, max_den: int = 10**6):
    re = Fraction(x.real).limit_denominator(max_den)
    im = Fraction(x.imag).limit_denominator(max_den)
    return ComplexRational(re, im)


def _roots_with_mult(p: Polynomial, tol: float):
    """Roots of ``p`` with multiplicity, exact where a Gaussian-rational root
    can be confirmed by exact evaluation."""
    out = []
    for factor, mult in squarefree_factors(p):
        if factor.degree == 1:
            out.append((-factor.coeff(0) / factor.coeff(1), mult))
            continue
        for r in _simple_roots(factor.to_array()):
            q = _snap(r)
            out.append((q if factor(q).is_zero() else r, mult))
    return out


def divisor_of(f: RationalFunction, tol: float = 1e-12) -> Divisor:
    """The principal divisor ``(f)``.

    Uses the exact divisor when ``f`` was built from roots; otherwise roots
    are found numerically and confirmed exactly when they are Gaussian
    rationals.  Any unconfirmed root marks the divisor ``numeric``.
    """
    if f.is_zero():
        raise ValueError("the zero function has no divisor")
    if f._divisor is not None:
        return f._divisor
    entries = []
    if f.num.degree >= 1:
        entries += _roots_with_mult(f.num, tol)
    if f.den.degree >= 1:
        entries += [(r, -k) for r, k in _roots_with_mult(f.den, tol)]
    if f.ord_infinity:
        entries.append((INFINITY, f.ord_infinity))
    D = Divisor(entries)
    if not D.numeric:
        f._divisor = D
    return D


def ord_at(f: RationalFunction, a) -> int:
    """Order of ``f`` at ``a``: zero order positive, pole order negative."""
    if f.is_zero():
        raise ValueError("order of the zero function is undefined")
    a = as_point(a)
    if a is INFINITY:
        return f.ord_infinity
    if isinstance(a, ComplexRational):
        return f.num.multiplicity(a) - f.den.multiplicity(a)
    return divisor_of(f).mult(a)


def _local_unit(f: RationalFunction, a):
    """``(ord_a f, u)`` where ``f = t^ord * u(t)`` in the local coordinate t
    (``z - a`` or ``1/z``) and ``u`` is the nonzero value of the unit at a."""
    if a is INFINITY:
        return f.ord_infinity, f.lead_ratio
    lin = Polynomial([-a, 1])
    num, den = f.num, f.den
    k = 0
    while True:
        q, r = num.divrem(lin)
        if not r.is_zero():
            break
        num, k = q, k + 1
    while True:
        q, r = den.divrem(lin)
        if not r.is_zero():
            break
        den, k = q, k - 1
    return k, num(a) / den(a)


def local_symbol(f: RationalFunction, g: RationalFunction, a) -> ComplexRational:
    """``tau_a(f, g) = (-1)^(pq) lim f^q / g^p`` with ``p = ord_a f``, ``q = ord_a g``.

    Writing ``f = t^p u``, ``g = t^q v`` in a local coordinate the limit is
    ``u(a)^q / v(a)^p``, computed exactly.
    """
    a = as_point(a)
    if not _is_exact(a):
        raise TypeError("local symbols are computed at exact points only")
    if f.is_zero() or g.is_zero():
        raise ValueError("local symbol of the zero function")
    p, u = _local_unit(f, a)
    q, v = _local_unit(g, a)
    sign = -1 if (p * q) % 2 else 1
    return u ** q / v ** p * sign


def aligned_orders(Df: Divisor, Dg: Divisor):
    """``[(point, ord_f, ord_g), ...]`` over the union of supports."""
    rows = [(p, k, Dg.mult(p)) for p, k in Df.items()]
    for p, k in Dg.items():
        if Df.mult(p) == 0:
            rows.append((p, 0, k))
    return rows


def _strip_root(p: Polynomial, e) -> Polynomial:
    if e is None or e is INFINITY:
        return p
    lin = Polynomial([-e, 1])
    while p.degree >= 1:
        q, r = p.divrem(lin)
        if not r.is_zero():
            break
        p = q
    return p


def is_admissible(f: RationalFunction, g: RationalFunction, excluded=None) -> Admissibility:
    """Classify the sign pattern of ``a -> ord_a f * ord_a g``.

    Common points are detected exactly through gcds of numerators and
    denominators, so no root finding is involved.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("admissibility of the zero function")
    excluded = as_point(excluded) if excluded is not None else None
    if excluded is not None and not _is_exact(excluded):
        raise TypeError("excluded point must be exact")
    pos = neg = False
    for a, b, sign in ((f.num, g.num, 1), (f.den, g.den, 1), (f.num, g.den, -1), (f.den, g.num, -1)):
        if a.degree < 1 or b.degree < 1:
            continue
        common = _strip_root(poly_gcd(a, b), excluded)
        if common.degree >= 1:
            pos, neg = pos or sign > 0, neg or sign < 0
    if excluded is not INFINITY:
        prod = f.ord_infinity * g.ord_infinity
        pos, neg = pos or prod > 0, neg or prod < 0
    if pos and neg:
        return Admissibility.NOT_ADMISSIBLE
    if pos:
        return Admissibility.ADMISSIBLE_NONNEG
    if neg:
        return Admissibility.ADMISSIBLE_NONPOS
    return Admissibility.GENERIC


def _eval_finite(g: RationalFunction, a):
    if isinstance(a, ComplexRational):
        return g.num(a) / g.den(a)
    return complex(g.num(a) / g.den(a))


def divisor_action(g: RationalFunction, D: Divisor):
    """``g(D) = prod g(a)^D(a)``.

    Returns a number, or :data:`ZERO` / :data:`INFINITE` when the product is
    forced to 0 or infinity by common points.  Raises
    :class:`IndeterminateError` if both happen.
    """
    if g.is_zero():
        raise ValueError("divisor action of the zero function")
    Dg = None
    value = ComplexRational.ONE
    zero_hits = inf_hits = False
    for a, k in D.items():
        if a is INFINITY or isinstance(a, ComplexRational):
            q = ord_at(g, a)
        else:
            Dg = Dg if Dg is not None else divisor_of(g)
            q = Dg.mult(a)
        if q == 0:
            v = g.lead_ratio if a is INFINITY else _eval_finite(g, a)
            value = value * (v ** k)
        elif q * k > 0:
            zero_hits = True
        else:
            inf_hits = True
    if zero_hits and inf_hits:
        raise IndeterminateError("divisor action meets both a zero and a pole of g")
    if zero_hits:
        return ZERO
    if inf_hits:
        return INFINITE
    return value
