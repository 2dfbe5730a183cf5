import warnings

import numpy as np
import pytest
import sympy

from reslab.core import BivariatePolynomial, Polynomial, as_cq
from reslab.divisors import RationalFunction
from reslab.exptransform import (
    Disk,
    MapImage,
    NotUnivalentError,
    Polygon,
    QuadratureError,
    RegionError,
    Union,
    cauchy_transform,
    certify_univalent,
    curve_residual,
    disk_kernel,
    exp_transform_disk,
    exp_transform_explicit,
    exp_transform_numeric,
    exp_transform_polydet,
    exp_transform_qd,
    extended_exp_transform,
    moment_matrix,
    polydet_matrix,
    pushforward_transform,
    recode_moments,
    reflect,
    region_from_json,
    schwarz_curve,
)

from .helpers import symbolic_polydet

C = 0.3
CARDIOID = RationalFunction(Polynomial([0, 1, as_cq(C)]))
OUTSIDE = [2 + 0.5j, -1.8 + 1j, 0.3 - 2.2j, 2.5j, -2.4 - 0.7j]


def test_disk_closed_form():
    assert exp_transform_disk(1, 2, 2) == 0.75
    assert abs(exp_transform_disk(1, 1e9, 3) - 1) < 1e-9
    with pytest.raises(RegionError):
        exp_transform_disk(1, 0.5, 2)


def test_disk_quadrature():
    assert abs(exp_transform_numeric(Disk(0, 1), 2, 2, tol=1e-10) - 0.75) < 1e-6
    for z, w in [(1.5j, -2), (3 + 1j, 1.2 - 0.9j)]:
        ref = exp_transform_disk(1.3, z, w)
        assert abs(exp_transform_numeric(Disk(0, 1.3), z, w) - ref) < 1e-6


def test_numeric_rejects_points_inside():
    with pytest.raises(RegionError):
        exp_transform_numeric(Disk(0, 1), 0.5, 2)
    with pytest.raises(RegionError):
        exp_transform_numeric(Disk(0, 1), 1.0, 2)


def test_refinement_budget_is_explicit():
    with pytest.raises(QuadratureError):
        exp_transform_numeric(Disk(0, 1), 1.001, 1.001, tol=1e-14, max_level=1)


def test_large_w_asymptotics():
    region = MapImage(CARDIOID)
    z = 2 + 0.5j
    K = cauchy_transform(region, z)
    for R in (50.0, 100.0, 200.0):
        w = R * (0.6 + 0.8j)
        err = abs(exp_transform_numeric(region, z, w) - (1 - K / np.conj(w)))
        assert err < 5 / R**2


def test_disjoint_union_is_multiplicative():
    d1, d2 = Disk(-2, 1), Disk(2.5j, 0.7)
    z, w = 2 + 0.3j, 1.5 - 1j
    whole = exp_transform_numeric(Union([d1, d2]), z, w)
    assert abs(whole - exp_transform_numeric(d1, z, w) * exp_transform_numeric(d2, z, w)) < 1e-7
    assert abs(whole - exp_transform_disk(1, z + 2, w + 2) * exp_transform_disk(0.7, z - 2.5j, w - 2.5j)) < 1e-7


def test_polygon_halves_multiply():
    sq = Polygon([0, 1, 1 + 1j, 1j])
    left = Polygon([0, 0.5, 0.5 + 1j, 1j])
    right = Polygon([0.5, 1, 1 + 1j, 0.5 + 1j])
    z, w = 2 + 2j, -1 + 0.5j
    full = exp_transform_numeric(sq, z, w)
    assert abs(full - exp_transform_numeric(left, z, w) * exp_transform_numeric(right, z, w)) < 1e-8
    assert sq.contains(0.5 + 0.5j) and not sq.contains(2)


def test_nonconvex_polygon_matches_union():
    L = Polygon([0, 2, 2 + 1j, 1 + 1j, 1 + 2j, 2j])
    parts = Union([Polygon([0, 2, 2 + 1j, 1j]), Polygon([1j, 1 + 1j, 1 + 2j, 2j])])
    z, w = 3 + 3j, -1 - 1j
    assert abs(exp_transform_numeric(L, z, w) - exp_transform_numeric(parts, z, w)) < 1e-8


def test_region_json():
    r = region_from_json({"type": "disk", "center": [1, 0], "radius": 2})
    assert isinstance(r, Disk) and r.center == 1 and r.radius == 2
    assert region_from_json(r.to_json()).to_json() == r.to_json()
    m = region_from_json({"type": "map", "F": CARDIOID.to_json()})
    assert isinstance(m, MapImage)
    with pytest.raises(ValueError):
        region_from_json({"type": "blob"})


def test_univalence_certificate():
    assert certify_univalent(CARDIOID).ok
    bad = RationalFunction(Polynomial([0, 1, 1]))  # critical point at -1/2
    assert not certify_univalent(bad).ok
    with pytest.raises(NotUnivalentError):
        MapImage(bad)


# -- closed forms ----------------------------------------------------------------

def test_qd_linear_map_is_disk():
    F = RationalFunction(Polynomial([0, as_cq("3/2")]))
    for z, w in [(2, 2), (1.6 + 1j, -2j)]:
        assert abs(exp_transform_qd(F, z, w) - exp_transform_disk(1.5, z, w)) < 1e-14


def test_qd_rejects_inside_points():
    with pytest.raises(RegionError):
        exp_transform_qd(CARDIOID, 0.1, 3)


def test_cardioid_routes_agree():
    K = exp_transform_explicit(CARDIOID)
    for z in OUTSIDE:
        for w in OUTSIDE[:3]:
            qd = exp_transform_qd(CARDIOID, z, w)
            assert abs(K(z, w) - qd) < 1e-9
            assert abs(exp_transform_polydet([1, C], z, w) - qd) < 1e-9


def test_cardioid_matches_quadrature():
    region = MapImage(CARDIOID)
    for z, w in [(2 + 0.5j, 2 + 0.5j), (-1.8 + 1j, 0.3 - 2.2j)]:
        num = exp_transform_numeric(region, z, w, tol=1e-9)
        assert abs(num - exp_transform_qd(CARDIOID, z, w)) < 1e-5


def test_hermitian_symmetry():
    K = exp_transform_explicit(CARDIOID)
    assert K.hermitian_defect(OUTSIDE) < 1e-12
    for z in OUTSIDE[:2]:
        for w in OUTSIDE[2:]:
            assert abs(exp_transform_qd(CARDIOID, w, z) - np.conj(exp_transform_qd(CARDIOID, z, w))) < 1e-12


def test_rational_map_routes_agree():
    u = Polynomial([0, 1])
    F = RationalFunction(u + Polynomial([0, 0, as_cq("1/10")]), Polynomial([-3, 1]))
    K = exp_transform_explicit(F)
    for z in (2 + 1j, -1.5 - 1j):
        for w in (1.7j, 2.2):
            assert abs(K(z, w) - exp_transform_qd(F, z, w)) < 1e-9
    num = exp_transform_numeric(MapImage(F), 2 + 1j, 1.7j, tol=1e-9)
    assert abs(num - exp_transform_qd(F, 2 + 1j, 1.7j)) < 1e-5


def test_explicit_warns_on_nonmonic_denominator():
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        K = exp_transform_explicit(Polynomial([0, 2]), den=Polynomial([4]))
    assert any("monic" in str(r.message) for r in rec)
    assert abs(K(2, 2) - exp_transform_disk(0.5, 2, 2)) < 1e-14


def test_explicit_first_order_kernel():
    a1 = 0.8 - 0.3j
    K = exp_transform_explicit(RationalFunction(Polynomial([0, as_cq(a1)])))
    for z, w in [(2, 2), (1 + 1j, -1.5j)]:
        x1, y1 = a1 / z, np.conj(a1) / np.conj(w)
        assert abs(K(z, w) - (1 - x1 * y1)) < 1e-14
        assert abs(exp_transform_polydet([a1], z, w) - (1 - x1 * y1)) < 1e-14


def test_polydet_layout_matches_symbolic():
    expr, x, y, M = symbolic_polydet(3)
    a = [0.7, 0.2 - 0.1j, 0.05j]
    z, w = 2 + 1j, -1.5 + 2j
    sub = {x[i]: a[i] / z for i in range(3)} | {y[i]: np.conj(a[i]) / np.conj(w) for i in range(3)}
    num = np.array(M.subs(sub).evalf(), dtype=np.complex128)
    assert np.allclose(num, polydet_matrix(a, z, w))
    assert abs(complex(expr.subs(sub).evalf()) - exp_transform_polydet(a, z, w)) < 1e-12


def test_second_order_expansion():
    expr, (x1, x2), (y1, y2), _ = symbolic_polydet(2)
    expected = 1 - x1 * y1 - 2 * x2 * y2 + x2**2 * y2**2 - x1 * x2 * y1 * y2 - x1**2 * y2 - x2 * y1**2
    assert sympy.expand(expr - expected) == 0


def test_third_order_polydet_matches_qd():
    a = [1, as_cq("1/5"), as_cq("1/20")]
    F = RationalFunction(Polynomial([0] + a))
    for z, w in [(2 + 0.5j, -2j), (-2.5, 1.9 + 1j)]:
        assert abs(exp_transform_polydet([complex(c) for c in a], z, w) - exp_transform_qd(F, z, w)) < 1e-9


def test_positive_and_decreasing_toward_boundary():
    theta = 0.7
    u0 = np.exp(1j * theta)
    vals = []
    for t in (3.0, 2.0, 1.5, 1.2, 1.05, 1.01, 1.001):
        z = complex(CARDIOID(t * u0))
        e = exp_transform_qd(CARDIOID, z, z)
        assert abs(e.imag) < 1e-12 and e.real > 0
        vals.append(e.real)
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 0.01


def test_one_minus_transform_is_positive_on_diagonal():
    K = exp_transform_explicit(CARDIOID)
    for z in OUTSIDE:
        assert 0 < K(z, z).real < 1


def test_kernel_vanishes_on_schwarz_locus():
    K = exp_transform_explicit(CARDIOID)
    Fs = reflect(CARDIOID)
    for u in (1.5 * np.exp(0.4j), 2.0 * np.exp(2.1j), 1.2j):
        z = complex(CARDIOID(u))
        s = complex(Fs(u))  # Schwarz function value at z
        assert abs(K.Q(z, s)) < 1e-12 * (1 + abs(z) * abs(s)) ** 2


# -- pushforward -----------------------------------------------------------------

def test_pushforward_identity_map():
    E1 = disk_kernel(1)
    ident = RationalFunction.identity()
    for z, w in [(2, 2), (1.5j, -3 + 1j)]:
        assert abs(pushforward_transform(E1, ident, 1, z, w) - exp_transform_disk(1, z, w)) < 1e-14


def test_pushforward_square_map(rng):
    E1 = disk_kernel(1)
    F = RationalFunction(Polynomial([0, 0, 1]))
    for _ in range(10):
        z = complex(rng.uniform(1.2, 4) * np.exp(1j * rng.uniform(0, 2 * np.pi)))
        w = complex(rng.uniform(1.2, 4) * np.exp(1j * rng.uniform(0, 2 * np.pi)))
        ref = (1 - 1 / (z * np.conj(w))) ** 2
        assert abs(pushforward_transform(E1, F, 2, z, w) - ref) < 1e-10
        assert abs(pushforward_transform(E1, F, 2, z, w, method="nested") - ref) < 1e-10


def test_pushforward_keeps_rationality():
    # E2^p of the square map equals the rational kernel Q/(T conj T) with T = z
    E1 = disk_kernel(1)
    F = RationalFunction(Polynomial([0, 0, 1]))
    Q = BivariatePolynomial([[1, 0, 0], [0, -2, 0], [0, 0, 1]])
    for z, w in [(2, 3j), (-1.5 + 1j, 2.5)]:
        assert abs(pushforward_transform(E1, F, 2, z, w) - complex(Q(z, np.conj(w))) / (z * np.conj(w)) ** 2) < 1e-12


def test_pushforward_argument_checks():
    with pytest.raises(ValueError):
        pushforward_transform(disk_kernel(1), RationalFunction.identity(), 0, 2, 2)
    with pytest.raises(ValueError):
        pushforward_transform(disk_kernel(1), RationalFunction.identity(), 1, 2, 2, method="bogus")


# -- Schwarz curve and moments --------------------------------------------------

def test_schwarz_curve_linear():
    r = as_cq("3/2")
    Q = schwarz_curve(RationalFunction(Polynomial([0, r])))
    assert Q == BivariatePolynomial([[-(r * r), 0], [0, 1]])


def test_schwarz_curve_cardioid():
    Q = schwarz_curve(CARDIOID)
    assert Q == Q.conj_transpose()
    bd = MapImage(CARDIOID).boundary(400)
    assert np.max(curve_residual(Q, bd)) < 1e-8


def test_schwarz_curve_rejects_constant():
    with pytest.raises(ValueError):
        schwarz_curve(RationalFunction.constant(2))


def test_recode_moments_disk_series():
    # disk moments a_mm = r^(2m+2)/(m+1) recode to b = r^2 at (0, 0) only
    r2 = 1.7
    a = np.diag([r2 ** (m + 1) / (m + 1) for m in range(4)]).astype(complex)
    b = recode_moments(a)
    assert abs(b[0, 0] - r2) < 1e-14
    b[0, 0] = 0
    assert np.max(np.abs(b)) < 1e-13


def test_recode_moments_matches_series(rng):
    X, Y = sympy.symbols("X Y")
    N = 2
    a = np.array([[complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(N + 1)] for _ in range(N + 1)])
    S = sum((sympy.Rational(round(a[m, n].real * 1e6), 10**6) + sympy.I * sympy.Rational(round(a[m, n].imag * 1e6), 10**6))
            * X ** (m + 1) * Y ** (n + 1) for m in range(N + 1) for n in range(N + 1))
    a_r = np.array([[complex(sympy.N(S.coeff(X, m + 1).coeff(Y, n + 1))) for n in range(N + 1)] for m in range(N + 1)])
    series = sympy.expand(sum((-S) ** k / sympy.factorial(k) for k in range(N + 2)))
    b = recode_moments(a_r)
    for m in range(N + 1):
        for n in range(N + 1):
            ref = -complex(sympy.N(series.coeff(X, m + 1).coeff(Y, n + 1)))
            assert abs(b[m, n] - ref) < 1e-12


def test_moments_disk():
    rep = moment_matrix(Disk(0, 1.5), 3)
    assert rep.order == 1
    assert abs(rep.b[0, 0] - 2.25) < 1e-6
    assert np.max(np.abs(rep.b[1:, :])) < 1e-6 and np.max(np.abs(rep.b[:, 1:])) < 1e-6


def test_moments_translation_invariant_order():
    assert moment_matrix(Disk(0.4 - 0.3j, 0.8), 3).order == 1
    F = RationalFunction(Polynomial([as_cq(0.5 + 0.25j), 1, as_cq(C)]))
    assert moment_matrix(MapImage(F), 3).order == moment_matrix(MapImage(CARDIOID), 3).order == 2


# -- extended transform ----------------------------------------------------------

def test_extended_reduction_identity():
    region = MapImage(CARDIOID)
    z, w, z0, w0 = 2 + 0.5j, -1.8 + 1j, 0.3 - 2.2j, 2.5j
    E = lambda p, q: exp_transform_qd(CARDIOID, p, q)  # noqa: E731
    ref = E(z, w) * E(z0, w0) / (E(z, w0) * E(z0, w))
    assert abs(extended_exp_transform(region, z, w, z0, w0, tol=1e-9) - ref) < 1e-7


def test_extended_trivial_and_limit():
    region = Disk(0, 1)
    assert abs(extended_exp_transform(region, 2, 3j, 2, -2) - 1) < 1e-12
    z, w = 2 + 1j, -1.5 + 1j
    far = extended_exp_transform(region, z, w, 1e4, 1e4j)
    assert abs(far - exp_transform_disk(1, z, w)) < 1e-3
