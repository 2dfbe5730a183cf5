"""Hypothesis strategies and seeded generators shared by the tests."""
from fractions import Fraction

from hypothesis import strategies as st

from reslab.core import ComplexRational, Polynomial
from reslab.divisors import RationalFunction

fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
gaussian = st.builds(ComplexRational, fractions, fractions)
nonzero_gaussian = gaussian.filter(lambda c: not c.is_zero())


@st.composite
def polynomials(draw, min_deg=0, max_deg=4):
    d = draw(st.integers(min_deg, max_deg))
    coeffs = draw(st.lists(gaussian, min_size=d, max_size=d))
    return Polynomial(coeffs + [draw(nonzero_gaussian)])


@st.composite
def distinct_points(draw, k):
    return draw(st.lists(gaussian, min_size=k, max_size=k, unique=True))


@st.composite
def generic_pair(draw, max_order=3):
    """Two factored rational functions with disjoint finite supports and
    equal numbers of zeros and poles (so infinity stays out of both)."""
    m = draw(st.integers(1, max_order))
    n = draw(st.integers(1, max_order))
    pts = draw(distinct_points(2 * (m + n)))
    f = RationalFunction.from_roots(pts[:m], pts[m:2 * m], lead=draw(nonzero_gaussian))
    g = RationalFunction.from_roots(pts[2 * m:2 * m + n], pts[2 * m + n:], lead=draw(nonzero_gaussian))
    return f, g, pts[:m], pts[m:2 * m], pts[2 * m:2 * m + n], pts[2 * m + n:]


def rand_fraction(rng, span=9, den=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_cq(rng, span=9, den=6):
    return ComplexRational(rand_fraction(rng, span, den), rand_fraction(rng, span, den))


def rand_distinct(rng, k, span=9, den=6):
    seen = []
    while len(seen) < k:
        c = rand_cq(rng, span, den)
        if c not in seen:
            seen.append(c)
    return seen


def rand_poly(rng, deg):
    coeffs = [rand_cq(rng) for _ in range(deg)]
    lead = rand_cq(rng)
    while lead.is_zero():
        lead = rand_cq(rng)
    return Polynomial(coeffs + [lead])


def symbolic_polydet(n):
    """Determinant of the structured 2n x 2n matrix in symbols x_i, y_i,
    built entry by entry from the layout of ``polydet_matrix``."""
    import sympy

    x = sympy.symbols(f"x1:{n + 1}")
    y = sympy.symbols(f"y1:{n + 1}")
    M = sympy.zeros(2 * n, 2 * n)
    for k in range(n):
        M[k, k] = -1
        for i in range(n):
            if k + 1 + i < 2 * n:
                M[k + 1 + i, k] = x[i]
            M[k + i, n + k] = y[n - 1 - i]
        M[k + n, n + k] = -1
    return sympy.expand(M.det()), x, y, M


def quoted_n2_expansion():
    """Candidate closed form for n = 2 that acceptance compares against the
    determinant term by term."""
    import sympy

    x1, x2, y1, y2 = sympy.symbols("x1 x2 y1 y2")
    return 1 - x1 * y1 - 2 * x2 * y2 - x2**2 * y2**2 - x1 * x2 * y1 * y2 + x1**2 * y2 + x2 * y1**2
