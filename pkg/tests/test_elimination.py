import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslab.core import BivariatePolynomial, ComplexRational, Polynomial, as_cq
from reslab.divisors import RationalFunction
from reslab.elimination import EliminationFunction, elimination_function, extended_elimination
from reslab.resultant import cross_ratio, res_divisor, res_four_poly

from .helpers import distinct_points, gaussian, nonzero_gaussian

RF = RationalFunction.from_roots
ONE = ComplexRational.ONE
ZETA = RationalFunction.identity()


@st.composite
def function_pair(draw):
    """f, g with no common poles; only f may have a pole at infinity."""
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    pts = draw(distinct_points(12))
    kf = draw(st.integers(0, m))
    f = RationalFunction(Polynomial.from_roots(pts[:m], draw(nonzero_gaussian)) + Polynomial([draw(gaussian)]),
                         Polynomial.from_roots(pts[3:3 + kf]))
    g = RationalFunction(Polynomial.from_roots(pts[6:6 + n], draw(nonzero_gaussian)),
                         Polynomial.from_roots(pts[9:9 + n]))
    return f, g


def _vanishes_on_image(E, f, g):
    Q = E.Q
    return Q.substitute(f.num, g.num, f.den, g.den, Q.deg_z, Q.deg_w).is_zero()


def test_inversion_example():
    E = elimination_function(ZETA, RF([], [0]))
    assert E.Q == BivariatePolynomial([[-1, 0], [0, 1]])
    assert E.P == Polynomial([0, 1]) and E.R == Polynomial([0, 1])
    assert E(as_cq(2), as_cq(3)) == as_cq("5/6")


def test_square_and_pole_example():
    f = RationalFunction(Polynomial([0, 0, 1]))
    g = RF([], [2])
    E = elimination_function(f, g)
    for k in range(1, 6):
        z = as_cq(k) / 3 + ComplexRational(0, 1)
        w = as_cq(-k) / 2 + as_cq(1) / 3
        assert E(z, w) == res_four_poly(f - z, g - w)
        num = res_divisor(f - z, g - w, numeric=True)
        assert abs(complex(num) - complex(E(z, w))) < 1e-9 * abs(complex(num))
    assert _vanishes_on_image(E, f, g)


def test_common_pole_rejected():
    with pytest.raises(ValueError):
        elimination_function(RF([1], [2]), RF([3], [2]))
    with pytest.raises(ValueError):
        elimination_function(ZETA, RationalFunction(Polynomial([1, 1, 1])))


def test_json_round_trip():
    E = elimination_function(ZETA, RF([], [0]))
    assert EliminationFunction.from_json(E.to_json()) == E


@given(function_pair(), st.lists(gaussian, min_size=3, max_size=3))
def test_image_curve_and_spot_values(pair, samples):
    f, g = pair
    E = elimination_function(f, g)
    assert _vanishes_on_image(E, f, g)
    assert E.Q.deg_w <= f.order and E.Q.deg_z <= g.order
    assert E.P.lc == ONE and E.R.lc == ONE
    for zeta in samples:
        fz, gz = f(zeta), g(zeta)
        if isinstance(fz, ComplexRational) and isinstance(gz, ComplexRational):
            assert E.Q(fz, gz).is_zero()


@given(function_pair(), st.lists(gaussian, min_size=4, max_size=4))
def test_agrees_with_resultant(pair, zw):
    f, g = pair
    E = elimination_function(f, g)
    for z, w in zip(zw[:2], zw[2:]):
        F, G = f - z, g - w
        try:
            ref = res_four_poly(F, G)
        except ValueError:
            continue
        assert E(z, w) == ref


@given(function_pair())
def test_corner_normalizations_agree(pair):
    f, g = pair
    E = elimination_function(f, g)
    assert E.Q.column(f.order) == E.P
    assert E.Q.row(g.order) == E.R


def test_extended_cross_ratio_power():
    f = RF([1, 2, 3], [-1, -2, 4], lead=as_cq("1/2"))
    z, w, z0, w0 = (as_cq(x) for x in ("1/3", "5/2", 7, "-3/4"))
    val = extended_elimination(f, f, z, w, z0, w0)
    # the four points pair as (z, z0) against (w, w0)
    assert val == cross_ratio(z, z0, w, w0) ** 3
    assert val == as_cq("-31/9") ** 3


def test_extended_cross_ratio_argument_order_matters():
    f = RF([1], [-1])
    z, w, z0, w0 = (as_cq(x) for x in ("1/3", "5/2", 7, "-3/4"))
    assert extended_elimination(f, f, z, w, z0, w0) != cross_ratio(z, w, z0, w0)


@given(st.integers(1, 3), distinct_points(4), distinct_points(6))
def test_extended_cross_ratio_power_random(n, quad, pts):
    f = RF(pts[:n], pts[3:3 + n])
    z, w, z0, w0 = quad
    assert extended_elimination(f, f, z, w, z0, w0) == cross_ratio(z, z0, w, w0) ** n


def test_extended_matches_ordinary():
    f = RF([0, 1], [2])
    g = RF([3], [-1, 5])
    E = elimination_function(f, g)
    z, w, z0, w0 = (as_cq(x) for x in ("1/2", "2/3", "-4", "7/5"))
    val = extended_elimination(f, g, z, w, z0, w0)
    assert val == E(z, w) * E(z0, w0) / (E(z, w0) * E(z0, w))
    assert val == extended_elimination(f, g, z0, w0, z, w)
    assert val == extended_elimination(f, g, z, w0, z0, w) ** -1


def test_extended_limit_approaches_ordinary():
    f = RF([0, 1], [2])
    g = RF([3], [-1, 5])
    E = elimination_function(f, g)
    z, w = as_cq("1/2"), as_cq("2/3")
    target = complex(E(z, w))
    big = as_cq(10) ** 8
    val = complex(extended_elimination(f, g, z, w, big, big * ComplexRational(1, 1)))
    assert abs(val - target) < 1e-6 * abs(target)


def test_extended_disjointness_enforced():
    f = RF([0], [1])
    with pytest.raises(ValueError):
        extended_elimination(f, f, as_cq(2), as_cq(2), as_cq(3), as_cq(4))
