"""Command-line front end: JSON in, JSON (or SVG) out.

Exit codes: 0 success, 2 invalid input, 3 numeric non-convergence.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import exptransform as et
from . import torus
from .core import RootFindingError
from .divisors import INFINITY, RationalFunction, divisor_of, local_symbol
from .elimination import elimination_function
from .identities import sum_terms
from .jsonio import InputError, dumps, loads, parse_complex, parse_point
from .resultant import res_cross_ratio, res_divisor, res_four_poly, weil_product
from .szego import day_formula, fourier_coeffs, szego_resultant, szego_sequence, toeplitz_det

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3

QUAD_TOL = 1e-5
EXACT_TOL = 1e-9


# -- argument helpers ---------------------------------------------------------

def _function(text, path):
    if text is None:
        raise InputError("missing rational function", path)
    obj = loads(text, path)
    try:
        return RationalFunction.from_json(obj)
    except InputError:
        raise
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise InputError(str(exc), path) from None


def _region(text, path):
    obj = loads(text, path)
    if not isinstance(obj, dict):
        raise InputError("region must be a JSON object", path)
    try:
        return et.region_from_json(obj)
    except KeyError as exc:
        raise InputError(f"missing key {exc}", path) from None
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc), path) from None


def _points(text, path, exact=True):
    """Comma-separated list or JSON array of points."""
    if text is None:
        raise InputError("missing point list", path)
    text = text.strip()
    if text.startswith("["):
        items = loads(text, path)
        if not isinstance(items, list):
            raise InputError("expected a list", path)
    else:
        items = [t for t in text.split(",") if t.strip()]
    out = []
    for k, item in enumerate(items):
        p = parse_point(item.strip() if isinstance(item, str) else item, f"{path}[{k}]")
        out.append(p if exact else complex(p))
    return out


def _indices(text, path):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip()) if text else ()
    except ValueError:
        raise InputError("index list must be comma-separated integers", path) from None


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise InputError(f"--{name} is required", f"--{name}")


def _cplx(args, name):
    _need(args, name)
    return parse_complex(getattr(args, name), f"--{name}")


def _window(text):
    try:
        x0, y0, x1, y1 = (float(t) for t in text.split(","))
    except ValueError:
        raise InputError("window must be x0,y0,x1,y1", "--window") from None
    if not (x1 > x0 and y1 > y0):
        raise InputError("window must have x1 > x0 and y1 > y0", "--window")
    return x0, x1, y0, y1


# -- subcommands ---------------------------------------------------------------

def cmd_res(args):
    f, g = _function(args.f, "--f"), _function(args.g, "--g")
    method = args.method
    if method == "four_poly":
        value = res_four_poly(f, g)
    elif method == "divisor":
        value = res_divisor(f, g)
    else:
        Df, Dg = divisor_of(f), divisor_of(g)
        if Df.numeric or Dg.numeric:
            raise InputError("cross-ratio route needs exact divisors", "--f")
        zf = [p for p, k in Df.items() for _ in range(k) if k > 0]
        pf = [p for p, k in Df.items() for _ in range(-k) if k < 0]
        zg = [p for p, k in Dg.items() for _ in range(k) if k > 0]
        pg = [p for p, k in Dg.items() for _ in range(-k) if k < 0]
        value = res_cross_ratio(zf, pf, zg, pg)
    return {"value": value}


def cmd_elim(args):
    f, g = _function(args.f, "--f"), _function(args.g, "--g")
    E = elimination_function(f, g)
    out = E.to_json()
    if args.z is not None and args.w is not None:
        out["value"] = E(parse_point(loads(args.z, "--z"), "--z"), parse_point(loads(args.w, "--w"), "--w"))
    return out


def cmd_weil(args):
    f, g = _function(args.f, "--f"), _function(args.g, "--g")
    Df, Dg = divisor_of(f), divisor_of(g)
    points = [p for p in set(Df) | set(Dg) if p is not INFINITY]
    points.sort(key=lambda p: (complex(p).real, complex(p).imag))
    points.append(INFINITY)
    symbols = [{"point": p, "value": local_symbol(f, g, p)} for p in points]
    return {"value": weil_product(f, g), "symbols": symbols}


def cmd_day(args):
    h = _function(args.h, "--h")
    _need(args, "N")
    value = day_formula(h, args.N)
    ref = toeplitz_det(fourier_coeffs(h, args.N), args.N)
    return {"value": value, "toeplitz": ref}


def cmd_szego(args):
    f, g = _function(args.f, "--f"), _function(args.g, "--g")
    tol = args.tol if args.tol is not None else EXACT_TOL
    out = {"value": szego_resultant(f, g, tol)}
    if args.N:
        out["sequence"] = szego_sequence(f, g, range(1, args.N + 1))
    return out


def cmd_identities(args):
    _need(args, "a", "b", "m", "J")
    a, b = _points(args.a, "--a"), _points(args.b, "--b")
    if len(a) != len(b):
        raise InputError("--a and --b must have equal length", "--b")
    J = _indices(args.J, "--J")
    terms = sum_terms(a, b, args.m, J, transposed=args.transposed)
    total = sum((v for _, v in terms[1:]), terms[0][1]) if terms else 1
    return {"terms": [v for _, v in terms], "subsets": [list(I) for I, _ in terms], "sum": total}


def cmd_exptransform(args):
    verb = args.verb
    if verb == "disk":
        _need(args, "r")
        return {"value": et.exp_transform_disk(args.r, _cplx(args, "z"), _cplx(args, "w"))}
    tol = args.tol if args.tol is not None else QUAD_TOL
    if verb == "numeric":
        _need(args, "region")
        region = _region(args.region, "--region")
        return {"value": et.exp_transform_numeric(region, _cplx(args, "z"), _cplx(args, "w"), tol)}
    if verb == "extended":
        _need(args, "region")
        region = _region(args.region, "--region")
        return {"value": et.extended_exp_transform(region, _cplx(args, "z"), _cplx(args, "w"),
                                                    _cplx(args, "z0"), _cplx(args, "w0"), tol)}
    if verb == "polydet":
        _need(args, "a")
        a = _points(args.a, "--a", exact=False)
        return {"value": et.exp_transform_polydet(a, _cplx(args, "z"), _cplx(args, "w"))}
    F = _function(args.f, "--f")
    if verb == "qd":
        return {"value": et.exp_transform_qd(F, _cplx(args, "z"), _cplx(args, "w"))}
    if verb == "explicit":
        K = et.exp_transform_explicit(F)
        out = {"kernel": K.to_json()}
        if args.z is not None and args.w is not None:
            out["value"] = K(_cplx(args, "z"), _cplx(args, "w"))
        return out
    if verb == "pushforward":
        _need(args, "p")
        base = et.disk_kernel(args.r if args.r is not None else 1)
        return {"value": et.pushforward_transform(base, F, args.p, _cplx(args, "z"), _cplx(args, "w"))}
    if verb == "schwarz":
        return {"Q": et.schwarz_curve(F).to_json()}
    raise InputError(f"unknown exptransform verb {verb!r}", "verb")


def cmd_boundary(args):
    F = _function(args.f, "--f")
    Q = et.schwarz_curve(F)
    if args.window:
        window = _window(args.window)
    else:
        pts = et.MapImage(F).boundary(256)
        pad = 0.15 * max(np.ptp(pts.real), np.ptp(pts.imag))
        window = (pts.real.min() - pad, pts.real.max() + pad, pts.imag.min() - pad, pts.imag.max() + pad)
    return et.boundary_svg(Q, window, args.resolution)


def cmd_moments(args):
    _need(args, "region", "N")
    region = _region(args.region, "--region")
    tol = args.tol if args.tol is not None else 1e-6
    return et.moment_matrix(region, args.N, tol).to_json()


def _divisor_pair(text, path):
    obj = loads(text, path)
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise InputError('divisor must be {"a": [...], "b": [...]}', path)
    a = [complex(parse_point(x, f"{path}.a[{k}]")) for k, x in enumerate(obj["a"])]
    b = [complex(parse_point(x, f"{path}.b[{k}]")) for k, x in enumerate(obj["b"])]
    try:
        return torus.TorusDivisorPair(a, b)
    except ValueError as exc:
        raise InputError(str(exc), path) from None


def cmd_torus(args):
    M = torus.TorusModulus(parse_complex(args.tau, "--tau") if args.tau else 1j,
                           args.K or 0)
    if args.verb == "abel":
        _need(args, "df")
        ok, (m, n) = torus.abel_check(_divisor_pair(args.df, "--df"), M)
        return {"principal": ok, "lattice_point": [m, n]}
    if args.verb == "res":
        _need(args, "df", "dg")
        return {"value": torus.torus_resultant(_divisor_pair(args.df, "--df"), _divisor_pair(args.dg, "--dg"), M)}
    if args.verb == "xi":
        if args.points:
            pts = [complex(p) for p in _points(args.points, "--points")]
            if len(pts) != 5:
                raise InputError("--points needs a1,a2,b1,b2,z0", "--points")
        else:
            rng = np.random.default_rng(args.seed)
            pts = list(rng.uniform(0, 1, 5) + 1j * rng.uniform(0, 1, 5) * M.tau.imag)
        xi1, xi2, dev = torus.weierstrass_xi_check(*pts, M)
        return {"points": pts, "xi1": xi1, "xi2": xi2, "deviation": dev,
                "printed_form_residual": torus.xi_printed_residual(xi1, xi2)}
    raise InputError(f"unknown torus verb {args.verb!r}", "verb")


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reslab", description=__doc__.splitlines()[0])
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *flags):
        for flag in flags:
            sp.add_argument(f"--{flag}")
        sp.add_argument("--out", default=argparse.SUPPRESS)
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        return sp

    sp = common(sub.add_parser("res", help="resultant of two rational functions"), "f", "g")
    sp.add_argument("--method", choices=["four_poly", "divisor", "cross_ratio"], default="four_poly")
    sp.set_defaults(run=cmd_res)

    sp = common(sub.add_parser("elim", help="elimination function (Q, P, R)"), "f", "g", "z", "w")
    sp.set_defaults(run=cmd_elim)

    sp = common(sub.add_parser("weil", help="local symbols and their product"), "f", "g")
    sp.set_defaults(run=cmd_weil)

    sp = common(sub.add_parser("day", help="Toeplitz determinant by splitting sums"), "h")
    sp.add_argument("--N", type=int)
    sp.set_defaults(run=cmd_day)

    sp = common(sub.add_parser("szego", help="resultant from log-symbol coefficients"), "f", "g")
    sp.add_argument("--tol", type=float)
    sp.add_argument("--N", type=int, help="also report normalized Toeplitz determinants 1..N")
    sp.set_defaults(run=cmd_szego)

    sp = common(sub.add_parser("identities", help="splitting resultants and their sum"), "a", "b", "J")
    sp.add_argument("--m", type=int)
    sp.add_argument("--transposed", action="store_true")
    sp.set_defaults(run=cmd_identities)

    sp = common(sub.add_parser("exptransform", help="exponential transform routes"),
                "f", "region", "z", "w", "z0", "w0", "a")
    sp.add_argument("verb", choices=["disk", "numeric", "extended", "qd", "explicit", "polydet",
                                     "pushforward", "schwarz"])
    sp.add_argument("--r", type=float)
    sp.add_argument("--p", type=int)
    sp.add_argument("--tol", type=float)
    sp.set_defaults(run=cmd_exptransform)

    sp = common(sub.add_parser("boundary", help="SVG of the boundary curve of F(disk)"), "f", "window")
    sp.add_argument("--resolution", type=int, default=512)
    sp.set_defaults(run=cmd_boundary)

    sp = common(sub.add_parser("moments", help="moment matrices and quadrature order"), "region")
    sp.add_argument("--N", type=int)
    sp.add_argument("--tol", type=float)
    sp.set_defaults(run=cmd_moments)

    sp = common(sub.add_parser("torus", help="theta-quotient resultants on a torus"),
                "tau", "df", "dg", "points")
    sp.add_argument("verb", choices=["res", "abel", "xi"])
    sp.add_argument("--K", type=int, help="theta truncation half-width")
    sp.set_defaults(run=cmd_torus)
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(err: dict, code: int) -> int:
    sys.stdout.write(json.dumps(err, separators=(",", ":")) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_OK
        return _fail({"code": "usage", "message": "invalid command line", "path": ""}, EXIT_INPUT)
    try:
        result = args.run(args)
    except InputError as exc:
        return _fail(exc.to_json(), EXIT_INPUT)
    except (et.QuadratureError, RootFindingError) as exc:
        return _fail({"code": "non_convergence", "message": str(exc), "path": ""}, EXIT_NUMERIC)
    except (ZeroDivisionError, ValueError, TypeError, KeyError) as exc:
        return _fail({"code": type(exc).__name__, "message": str(exc), "path": ""}, EXIT_INPUT)
    except ArithmeticError as exc:
        if type(exc).__name__ == "IndeterminateError":
            return _fail({"code": "IndeterminateError", "message": str(exc), "path": ""}, EXIT_INPUT)
        return _fail({"code": "numeric_failure", "message": str(exc), "path": ""}, EXIT_NUMERIC)
    text = result if isinstance(result, str) else dumps(result) + "\n"
    _emit(text, getattr(args, "out", None))
    return EXIT_OK


def run(argv) -> int:
    return main(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
