"""Plane regions for the exponential transform and their quadrature rules.

Every region exposes ``cauchy_sum`` and ``moment_sums`` at a refinement
``level``; the midpoint grids live in parameter space (the unit disk for
map images, the unit square for triangles) and are pulled back with the
exact Jacobian.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..core import Polynomial, as_cq
from ..divisors import RationalFunction

__all__ = [
    "RegionError",
    "NotUnivalentError",
    "UnivalenceCertificate",
    "Disk",
    "Polygon",
    "MapImage",
    "Union",
    "certify_univalent",
    "region_from_json",
]

BOUNDARY_SAMPLES = 2048


class RegionError(ValueError):
    """A point lies inside (or too close to) the region."""


class NotUnivalentError(ValueError):
    pass


# -- univalence ---------------------------------------------------------------

@dataclass(frozen=True)
class UnivalenceCertificate:
    """Numerical evidence that ``F`` is univalent on the closed unit disk.

    Poles of ``F`` and zeros of ``F'`` must lie outside the closed disk and
    the boundary image ``F(e^{it})`` must be a simple closed polygon on
    ``samples`` points.  By the argument principle the first and last
    conditions already force univalence.
    """

    min_pole_modulus: float
    min_critical_modulus: float
    samples: int
    simple_boundary: bool

    @property
    def ok(self) -> bool:
        return self.min_pole_modulus > 1.0 and self.min_critical_modulus > 1.0 and self.simple_boundary


def _roots(arr: np.ndarray) -> np.ndarray:
    arr = np.trim_zeros(np.asarray(arr, dtype=np.complex128), "b")
    if len(arr) <= 1:
        return np.zeros(0, dtype=np.complex128)
    return np.roots(arr[::-1])


def certify_univalent(F: RationalFunction, samples: int = BOUNDARY_SAMPLES) -> UnivalenceCertificate:
    A, B = F.num.to_array(), F.den.to_array()
    D = (F.num.derivative() * F.den - F.num * F.den.derivative()).to_array()
    if not np.any(D):
        raise NotUnivalentError("F is constant")
    poles = _roots(B)
    crit = _roots(D)
    min_pole = float(np.min(np.abs(poles))) if len(poles) else math.inf
    min_crit = float(np.min(np.abs(crit))) if len(crit) else math.inf
    simple = False
    if min_pole > 1.0:
        u = np.exp(2j * np.pi * np.arange(samples) / samples)
        curve = np.polyval(A[::-1], u) / np.polyval(B[::-1], u)
        simple = not kernels.polyline_self_intersects(curve)
    return UnivalenceCertificate(min_pole, min_crit, samples, simple)


# -- regions -------------------------------------------------------------------

def _level_sizes(level: int):
    nr = 16 * 2 ** level
    return nr, 4 * nr


def _polar_grid(nr, nt):
    rho = (np.arange(nr) + 0.5) / nr
    th = (np.arange(nt) + 0.5) * (2 * np.pi / nt)
    return rho, rho[:, None] * np.exp(1j * th)[None, :]


class MapImage:
    """Image ``F(D)`` of the unit disk under a univalent rational ``F``."""

    kind = "map"

    def __init__(self, F: RationalFunction, certify: bool = True):
        if F.is_constant():
            raise NotUnivalentError("F is constant")
        self.F = F
        self._A = F.num.to_array()
        self._B = F.den.to_array()
        self._D = (F.num.derivative() * F.den - F.num * F.den.derivative()).to_array()
        self.certificate = certify_univalent(F) if certify else None
        if certify and not self.certificate.ok:
            raise NotUnivalentError(f"univalence certificate failed: {self.certificate}")

    def require_outside(self, *points, margin: float = 1e-9):
        """Raise unless every point has all its preimages outside the closed disk."""
        size = max(len(self._A), len(self._B))
        A = np.pad(self._A, (0, size - len(self._A)))
        B = np.pad(self._B, (0, size - len(self._B)))
        for z in points:
            pre = _roots(A - complex(z) * B)
            if len(pre) and np.min(np.abs(pre)) <= 1.0 + margin:
                raise RegionError(f"point {complex(z)} lies in the closure of the region")

    def nodes(self, level: int):
        """Image points and area weights of the polar midpoint grid."""
        nr, nt = _level_sizes(level)
        rho, u = _polar_grid(nr, nt)
        b = np.polyval(self._B[::-1], u)
        pts = np.polyval(self._A[::-1], u) / b
        wts = np.abs(np.polyval(self._D[::-1], u) / (b * b)) ** 2 * rho[:, None] * (2 * np.pi / (nt * nr))
        return pts.ravel(), wts.ravel()

    def cauchy_sum(self, z, w, z0=0j, w0=0j, extended=False, level=0):
        nr, nt = _level_sizes(level)
        return kernels.polar_cauchy_sum(self._A, self._B, self._D, z, w, z0, w0, extended, nr, nt)

    def moment_sums(self, N, level=0):
        nr, nt = _level_sizes(level)
        return kernels.polar_moment_sums(self._A, self._B, self._D, N, nr, nt)

    def boundary(self, samples: int = 512) -> np.ndarray:
        u = np.exp(2j * np.pi * np.arange(samples) / samples)
        return self.F.num(u) / self.F.den(u)

    def to_json(self):
        return {"type": "map", "F": self.F.to_json()}


class Disk(MapImage):
    """Disk ``|z - center| < radius``; quadrature through ``F(u) = center + radius u``."""

    kind = "disk"

    def __init__(self, center=0j, radius=1.0):
        if not radius > 0:
            raise ValueError("radius must be positive")
        self.center = complex(center)
        self.radius = float(radius)
        F = RationalFunction(Polynomial([as_cq(self.center), as_cq(self.radius)]))
        super().__init__(F, certify=False)

    def require_outside(self, *points, margin: float = 1e-9):
        for z in points:
            if abs(complex(z) - self.center) <= self.radius * (1 + margin):
                raise RegionError(f"point {complex(z)} lies in the closed disk")

    def to_json(self):
        return {"type": "disk", "center": [self.center.real, self.center.imag], "radius": self.radius}


def _signed_area(v):
    x, y = v.real, v.imag
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _point_in_triangle(p, a, b, c):
    def cross(o, s, t):
        return (s.real - o.real) * (t.imag - o.imag) - (s.imag - o.imag) * (t.real - o.real)
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return d1 >= 0 and d2 >= 0 and d3 >= 0


def _ear_clip(verts):
    """Triangulate a simple counter-clockwise polygon."""
    idx = list(range(len(verts)))
    tris = []
    guard = 0
    while len(idx) > 3:
        guard += 1
        if guard > 10 * len(verts) ** 2:
            raise ValueError("ear clipping failed; polygon may not be simple")
        for k in range(len(idx)):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
            a, b, c = verts[i0], verts[i1], verts[i2]
            if ((b - a).conjugate() * (c - a)).imag <= 0:
                continue  # reflex or degenerate corner
            if any(_point_in_triangle(verts[j], a, b, c) for j in idx if j not in (i0, i1, i2)):
                continue
            tris.append((a, b, c))
            del idx[k]
            break
    tris.append(tuple(verts[i] for i in idx))
    return tris


class Polygon:
    """Simple polygon given by its vertex loop."""

    kind = "polygon"

    def __init__(self, vertices):
        v = np.asarray([complex(x) for x in vertices], dtype=np.complex128)
        if len(v) < 3:
            raise ValueError("a polygon needs at least three vertices")
        if kernels.polyline_self_intersects(v):
            raise ValueError("polygon is not simple")
        area = _signed_area(v)
        if area == 0:
            raise ValueError("degenerate polygon")
        if area < 0:
            v = v[::-1]
        self.vertices = v
        self.triangles = _ear_clip(list(v))
        self._cache = {}

    def contains(self, z) -> bool:
        z = complex(z)
        return any(_point_in_triangle(z, *t) for t in self.triangles)

    def require_outside(self, *points, margin: float = 1e-9):
        scale = float(np.max(np.abs(self.vertices - self.vertices.mean())))
        for z in points:
            z = complex(z)
            if self.contains(z) or self._distance(z) <= margin * scale:
                raise RegionError(f"point {z} lies in the closed polygon")

    def _distance(self, z) -> float:
        v = self.vertices
        best = math.inf
        for a, b in zip(v, np.roll(v, -1)):
            ab = b - a
            t = min(1.0, max(0.0, ((z - a) * ab.conjugate()).real / abs(ab) ** 2))
            best = min(best, abs(z - (a + t * ab)))
        return best

    def nodes(self, level: int):
        """Midpoint nodes through the collapsed square-to-triangle map
        ``(s, t) -> a + s(b - a) + s t (c - b)`` with Jacobian ``2 |T| s``."""
        if level in self._cache:
            return self._cache[level]
        n = 8 * 2 ** level
        g = (np.arange(n) + 0.5) / n
        s, t = np.meshgrid(g, g, indexing="ij")
        pts, wts = [], []
        for a, b, c in self.triangles:
            area = abs(((b - a).conjugate() * (c - a)).imag) / 2
            pts.append((a + s * (b - a) + s * t * (c - b)).ravel())
            wts.append((2 * area * s / n ** 2).ravel())
        out = (np.concatenate(pts), np.concatenate(wts))
        self._cache = {level: out}
        return out

    def cauchy_sum(self, z, w, z0=0j, w0=0j, extended=False, level=0):
        pts, wts = self.nodes(level)
        return kernels.nodes_cauchy_sum(pts, wts, z, w, z0, w0, extended)

    def moment_sums(self, N, level=0):
        pts, wts = self.nodes(level)
        return kernels.nodes_moment_sums(pts, wts, N)

    def boundary(self, samples: int = 0) -> np.ndarray:
        return self.vertices

    def to_json(self):
        return {"type": "polygon", "vertices": [[x.real, x.imag] for x in self.vertices]}


class Union:
    """Disjoint union of regions; integrals add."""

    kind = "union"

    def __init__(self, parts):
        self.parts = list(parts)
        if not self.parts:
            raise ValueError("empty union")

    def require_outside(self, *points, margin: float = 1e-9):
        for part in self.parts:
            part.require_outside(*points, margin=margin)

    def nodes(self, level: int):
        pairs = [p.nodes(level) for p in self.parts]
        return np.concatenate([a for a, _ in pairs]), np.concatenate([b for _, b in pairs])

    def cauchy_sum(self, z, w, z0=0j, w0=0j, extended=False, level=0):
        return sum(p.cauchy_sum(z, w, z0, w0, extended, level) for p in self.parts)

    def moment_sums(self, N, level=0):
        return sum(p.moment_sums(N, level) for p in self.parts)

    def boundary(self, samples: int = 512):
        return np.concatenate([p.boundary(samples) for p in self.parts])

    def to_json(self):
        return {"type": "union", "parts": [p.to_json() for p in self.parts]}


def _complex(obj) -> complex:
    if isinstance(obj, (list, tuple)):
        return complex(float(obj[0]), float(obj[1]))
    if isinstance(obj, dict):
        return complex(float(obj.get("re", 0)), float(obj.get("im", 0)))
    return complex(float(obj))


def region_from_json(obj):
    """``{"type": "disk", "center": [x, y], "radius": r}``,
    ``{"type": "polygon", "vertices": [[x, y], ...]}`` or
    ``{"type": "map", "F": <rational function>}`` or
    ``{"type": "union", "parts": [...]}``."""
    kind = obj.get("type")
    if kind == "disk":
        return Disk(_complex(obj.get("center", 0)), float(obj["radius"]))
    if kind == "polygon":
        return Polygon([_complex(v) for v in obj["vertices"]])
    if kind == "map":
        return MapImage(RationalFunction.from_json(obj["F"]))
    if kind == "union":
        return Union([region_from_json(p) for p in obj["parts"]])
    raise ValueError(f"unknown region type {kind!r}")
