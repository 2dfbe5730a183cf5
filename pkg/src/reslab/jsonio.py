"""JSON encoding for exact and floating values.

Exact rationals travel as ``"p/q"`` strings inside ``{"re", "im"}`` objects;
floats use the shortest repr that round-trips.  Input JSON is parsed with
``parse_float=Fraction`` so decimal literals stay exact.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .core import ComplexRational, as_cq
from .divisors import INFINITY, ZERO, Degenerate

__all__ = ["InputError", "loads", "parse_point", "parse_complex", "encode", "dumps"]


class InputError(ValueError):
    """Malformed or invalid input; carries the offending path."""

    def __init__(self, message: str, path: str = "", code: str = "invalid_input"):
        super().__init__(message)
        self.path = path
        self.code = code

    def to_json(self):
        return {"code": self.code, "message": str(self), "path": self.path}


def loads(text: str, path: str = ""):
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at char {exc.pos}", path, "malformed_json") from None


def parse_point(obj, path: str = ""):
    """Exact point from a number, ``"p/q"`` string, ``[re, im]`` pair,
    ``{"re", "im"}`` object or ``"inf"``."""
    if isinstance(obj, str) and obj.strip().lower() in {"inf", "infinity"}:
        return INFINITY
    try:
        if isinstance(obj, (list, tuple)):
            if len(obj) != 2:
                raise ValueError("a point pair must have two entries")
            return ComplexRational.from_json(obj)
        return as_cq(obj)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a number: {obj!r} ({exc})", path) from None


def parse_complex(text: str, path: str = "") -> complex:
    """Float complex from a CLI string: JSON forms as in :func:`parse_point`
    or Python syntax such as ``2+1j``."""
    try:
        obj = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError:
        try:
            z = complex(text.replace(" ", ""))
        except ValueError:
            raise InputError(f"not a complex number: {text!r}", path) from None
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise InputError("non-finite values are not allowed here", path)
        return z
    p = parse_point(obj, path)
    if p is INFINITY:
        raise InputError("infinity is not allowed here", path)
    return complex(p)


def _float(x: float):
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        return repr(x)
    return x


def encode(value):
    """Recursively turn results into JSON-ready data."""
    if isinstance(value, ComplexRational):
        return value.to_json()
    if isinstance(value, Degenerate):
        return {"marker": "zero" if value is ZERO else "infinite"}
    if value is INFINITY:
        return "inf"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": _float(value.real), "im": _float(value.imag)}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _float(value)
    if isinstance(value, np.ndarray):
        return [encode(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "to_json"):
        return encode(value.to_json())
    if value is None or isinstance(value, str):
        return value
    raise TypeError(f"cannot encode {type(value).__name__}")


def dumps(value) -> str:
    return json.dumps(encode(value), separators=(",", ":"))

