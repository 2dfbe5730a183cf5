"""Hot numeric kernels, each in a numba and a pure-numpy flavour.

The public names dispatch to the numba version when numba is usable (see
:mod:`reslab._accel`).  Both flavours are importable directly as
``<name>_numba`` and ``<name>_numpy`` so tests and the benchmark can compare
them.
"""
from __future__ import annotations

import math

import numpy as np

from ._accel import USE_NUMBA, njit, prange

__all__ = [
    "aberth",
    "theta_sum",
    "polar_cauchy_sum",
    "polar_moment_sums",
    "nodes_cauchy_sum",
    "nodes_moment_sums",
    "marching_squares",
    "polyline_self_intersects",
    "USE_NUMBA",
]

TWO_PI = 2.0 * math.pi


# -- polynomial root finding -------------------------------------------------

def _initial_guesses(c):
    n = len(c) - 1
    lead = abs(c[n])
    radius = 0.0
    for k in range(n):
        if c[k] != 0:
            radius = max(radius, (abs(c[k]) / lead) ** (1.0 / (n - k)))
    radius = max(radius, 1e-3)
    ang = TWO_PI * np.arange(n) / n + 0.4
    return radius * np.exp(1j * ang)


@njit(cache=True)
def _aberth_nb(c, z, maxiter, eps):
    n = z.shape[0]
    deg = c.shape[0] - 1
    done = np.zeros(n, dtype=np.bool_)
    it = 0
    for it in range(1, maxiter + 1):
        all_done = True
        for k in range(n):
            if done[k]:
                continue
            p = c[deg]
            dp = 0j
            pa = abs(c[deg])
            az = abs(z[k])
            for j in range(deg - 1, -1, -1):
                dp = dp * z[k] + p
                p = p * z[k] + c[j]
                pa = pa * az + abs(c[j])
            # backward-error stop: |p(z)| at the rounding level of the evaluation
            if abs(p) <= 4.0 * (deg + 1) * 2.220446049250313e-16 * pa:
                done[k] = True
                continue
            ratio = p / dp
            s = 0j
            for j in range(n):
                if j != k:
                    s += 1.0 / (z[k] - z[j])
            delta = ratio / (1.0 - ratio * s)
            z[k] -= delta
            if abs(delta) <= eps * (1.0 + abs(z[k])):
                done[k] = True
            else:
                all_done = False
        if all_done:
            return z, True, it
    return z, False, it


def _aberth_np(c, z, maxiter, eps):
    deg = len(c) - 1
    rev = c[::-1]
    drev = (c[1:] * np.arange(1, deg + 1))[::-1]
    done = np.zeros(len(z), dtype=bool)
    for it in range(1, maxiter + 1):
        p = np.polyval(rev, z)
        dp = np.polyval(drev, z)
        pa = np.polyval(np.abs(rev), np.abs(z))
        small = np.abs(p) <= 4.0 * (deg + 1) * 2.220446049250313e-16 * pa
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(small, 0.0, p / dp)
            delta = np.where(done | small, 0.0, ratio / (1.0 - ratio * s))
        z = z - delta
        done |= (np.abs(delta) <= eps * (1.0 + np.abs(z))) | small
        if done.all():
            return z, True, it
    return z, False, maxiter


def aberth_numba(c, maxiter=500, eps=4e-16):
    c = np.asarray(c, dtype=np.complex128)
    z, ok, it = _aberth_nb(c, _initial_guesses(c).astype(np.complex128), maxiter, eps)
    return z, bool(ok), int(it)


def aberth_numpy(c, maxiter=500, eps=4e-16):
    c = np.asarray(c, dtype=np.complex128)
    return _aberth_np(c, _initial_guesses(c), maxiter, eps)


def aberth(c, maxiter=500, eps=4e-16):
    """Aberth-Ehrlich iteration on ascending coefficients ``c`` (degree >= 1).

    Returns ``(roots, converged, iterations)``.
    """
    return (aberth_numba if USE_NUMBA else aberth_numpy)(c, maxiter, eps)


# -- theta sums --------------------------------------------------------------

@njit(cache=True)
def _theta_nb(zeta, tau, K):
    out = np.empty(zeta.shape[0], dtype=np.complex128)
    for i in range(zeta.shape[0]):
        acc = 0j
        base = 1.0 + tau + 2.0 * zeta[i]
        for k in range(-K, K + 1):
            acc += np.exp(1j * math.pi * (k * k * tau + k * base))
        out[i] = acc
    return out


def _theta_np(zeta, tau, K):
    k = np.arange(-K, K + 1, dtype=np.float64)
    out = np.empty(zeta.shape[0], dtype=np.complex128)
    step = max(1, 200000 // len(k))
    for lo in range(0, zeta.shape[0], step):
        z = zeta[lo:lo + step]
        phase = np.pi * 1j * (k[None, :] ** 2 * tau + k[None, :] * (1.0 + tau + 2.0 * z[:, None]))
        out[lo:lo + step] = np.exp(phase).sum(axis=1)
    return out


def theta_sum_numba(zeta, tau, K):
    return _theta_nb(np.ascontiguousarray(zeta, dtype=np.complex128), complex(tau), int(K))


def theta_sum_numpy(zeta, tau, K):
    return _theta_np(np.ascontiguousarray(zeta, dtype=np.complex128), complex(tau), int(K))


def theta_sum(zeta, tau, K):
    """``sum_{|k|<=K} exp(pi i (k^2 tau + k (1 + tau + 2 zeta)))`` for each zeta."""
    return (theta_sum_numba if USE_NUMBA else theta_sum_numpy)(zeta, tau, K)


# -- quadrature over the image of the unit disk ------------------------------

@njit(cache=True)
def _horner(c, u):
    acc = 0j
    for k in range(c.shape[0] - 1, -1, -1):
        acc = acc * u + c[k]
    return acc


@njit(cache=True, parallel=True)
def _polar_cauchy_nb(A, B, D, z, w, z0, w0, extended, nr, nt):
    rows = np.zeros(nr, dtype=np.complex128)
    dth = TWO_PI / nt
    for ir in prange(nr):
        rho = (ir + 0.5) / nr
        acc = 0j
        for it in range(nt):
            th = (it + 0.5) * dth
            u = rho * (math.cos(th) + 1j * math.sin(th))
            b = _horner(B, u)
            F = _horner(A, u) / b
            dF = _horner(D, u) / (b * b)
            wt = (dF.real * dF.real + dF.imag * dF.imag) * rho
            if extended:
                kz = 1.0 / (F - z) - 1.0 / (F - z0)
                kw = 1.0 / (F - w) - 1.0 / (F - w0)
            else:
                kz = 1.0 / (F - z)
                kw = 1.0 / (F - w)
            acc += wt * kz * np.conj(kw)
        rows[ir] = acc
    return rows.sum() * dth / nr


def _polar_grid(nr, nt, lo, hi):
    rho = (np.arange(lo, hi) + 0.5) / nr
    th = (np.arange(nt) + 0.5) * (TWO_PI / nt)
    return rho, rho[:, None] * np.exp(1j * th)[None, :]


def _polar_cauchy_np(A, B, D, z, w, z0, w0, extended, nr, nt):
    total = 0j
    ra, rb, rd = A[::-1], B[::-1], D[::-1]
    chunk = max(1, 400000 // nt)
    for lo in range(0, nr, chunk):
        rho, u = _polar_grid(nr, nt, lo, min(nr, lo + chunk))
        b = np.polyval(rb, u)
        F = np.polyval(ra, u) / b
        dF = np.polyval(rd, u) / (b * b)
        wt = np.abs(dF) ** 2 * rho[:, None]
        if extended:
            kz = 1.0 / (F - z) - 1.0 / (F - z0)
            kw = 1.0 / (F - w) - 1.0 / (F - w0)
        else:
            kz = 1.0 / (F - z)
            kw = 1.0 / (F - w)
        total += np.sum(wt * kz * np.conj(kw))
    return total * (TWO_PI / nt) / nr


def _cauchy_args(A, B, D, z, w, z0, w0, extended, nr, nt):
    arr = [np.ascontiguousarray(x, dtype=np.complex128) for x in (A, B, D)]
    return (*arr, complex(z), complex(w), complex(z0), complex(w0), bool(extended), int(nr), int(nt))


def polar_cauchy_sum_numba(*args):
    return complex(_polar_cauchy_nb(*_cauchy_args(*args)))


def polar_cauchy_sum_numpy(*args):
    return complex(_polar_cauchy_np(*_cauchy_args(*args)))


def polar_cauchy_sum(A, B, D, z, w, z0=0j, w0=0j, extended=False, nr=64, nt=256):
    """Midpoint sum of ``|F'|^2 k(F(u))`` over the unit disk in polar cells.

    ``F = A/B`` and ``F' = D/B^2`` (ascending coefficient arrays).  The
    kernel is ``1/((F-z) conj(F-w))`` or, when ``extended``, the product of
    the differences ``1/(F-z) - 1/(F-z0)`` and ``conj(1/(F-w) - 1/(F-w0))``.
    """
    fn = polar_cauchy_sum_numba if USE_NUMBA else polar_cauchy_sum_numpy
    return fn(A, B, D, z, w, z0, w0, extended, nr, nt)


@njit(cache=True, parallel=True)
def _polar_moments_nb(A, B, D, N, nr, nt):
    rows = np.zeros((nr, N + 1, N + 1), dtype=np.complex128)
    dth = TWO_PI / nt
    for ir in prange(nr):
        rho = (ir + 0.5) / nr
        pz = np.empty(N + 1, dtype=np.complex128)
        for it in range(nt):
            th = (it + 0.5) * dth
            u = rho * (math.cos(th) + 1j * math.sin(th))
            b = _horner(B, u)
            F = _horner(A, u) / b
            dF = _horner(D, u) / (b * b)
            wt = (dF.real * dF.real + dF.imag * dF.imag) * rho
            pz[0] = 1.0
            for m in range(1, N + 1):
                pz[m] = pz[m - 1] * F
            for m in range(N + 1):
                for n in range(N + 1):
                    rows[ir, m, n] += wt * pz[m] * np.conj(pz[n])
    return rows.sum(axis=0) * dth / nr


def _polar_moments_np(A, B, D, N, nr, nt):
    total = np.zeros((N + 1, N + 1), dtype=np.complex128)
    ra, rb, rd = A[::-1], B[::-1], D[::-1]
    chunk = max(1, 200000 // nt)
    for lo in range(0, nr, chunk):
        rho, u = _polar_grid(nr, nt, lo, min(nr, lo + chunk))
        b = np.polyval(rb, u)
        F = (np.polyval(ra, u) / b).ravel()
        wt = (np.abs(np.polyval(rd, u) / (b * b)) ** 2 * rho[:, None]).ravel()
        powers = F[None, :] ** np.arange(N + 1)[:, None]
        total += (powers * wt[None, :]) @ np.conj(powers).T
    return total * (TWO_PI / nt) / nr


def polar_moment_sums_numba(A, B, D, N, nr, nt):
    arr = [np.ascontiguousarray(x, dtype=np.complex128) for x in (A, B, D)]
    return _polar_moments_nb(*arr, int(N), int(nr), int(nt))


def polar_moment_sums_numpy(A, B, D, N, nr, nt):
    arr = [np.ascontiguousarray(x, dtype=np.complex128) for x in (A, B, D)]
    return _polar_moments_np(*arr, int(N), int(nr), int(nt))


def polar_moment_sums(A, B, D, N, nr=64, nt=256):
    """Midpoint sums of ``F^m conj(F)^n |F'|^2`` over the unit disk, m, n <= N."""
    fn = polar_moment_sums_numba if USE_NUMBA else polar_moment_sums_numpy
    return fn(A, B, D, N, nr, nt)


# -- quadrature on explicit node sets ----------------------------------------

@njit(cache=True)
def _nodes_cauchy_nb(pts, wts, z, w, z0, w0, extended):
    acc = 0j
    for i in range(pts.shape[0]):
        F = pts[i]
        if extended:
            kz = 1.0 / (F - z) - 1.0 / (F - z0)
            kw = 1.0 / (F - w) - 1.0 / (F - w0)
        else:
            kz = 1.0 / (F - z)
            kw = 1.0 / (F - w)
        acc += wts[i] * kz * np.conj(kw)
    return acc


def _nodes_cauchy_np(pts, wts, z, w, z0, w0, extended):
    if extended:
        kz = 1.0 / (pts - z) - 1.0 / (pts - z0)
        kw = 1.0 / (pts - w) - 1.0 / (pts - w0)
    else:
        kz = 1.0 / (pts - z)
        kw = 1.0 / (pts - w)
    return np.sum(wts * kz * np.conj(kw))


def nodes_cauchy_sum(pts, wts, z, w, z0=0j, w0=0j, extended=False):
    pts = np.ascontiguousarray(pts, dtype=np.complex128)
    wts = np.ascontiguousarray(wts, dtype=np.float64)
    fn = _nodes_cauchy_nb if USE_NUMBA else _nodes_cauchy_np
    return complex(fn(pts, wts, complex(z), complex(w), complex(z0), complex(w0), bool(extended)))


def nodes_moment_sums(pts, wts, N):
    pts = np.asarray(pts, dtype=np.complex128)
    powers = pts[None, :] ** np.arange(N + 1)[:, None]
    return (powers * np.asarray(wts)[None, :]) @ np.conj(powers).T


# -- marching squares --------------------------------------------------------

@njit(cache=True)
def _edge_point(e, i, j, v00, v01, v11, v10, x0, y0, dx, dy):
    if e == 0:
        return x0 + (j + v00 / (v00 - v01)) * dx, y0 + i * dy
    if e == 1:
        return x0 + (j + 1) * dx, y0 + (i + v01 / (v01 - v11)) * dy
    if e == 2:
        return x0 + (j + v10 / (v10 - v11)) * dx, y0 + (i + 1) * dy
    return x0 + j * dx, y0 + (i + v00 / (v00 - v10)) * dy


@njit(cache=True)
def _marching_nb(V, x0, y0, dx, dy):
    ny, nx = V.shape
    out = np.empty((2 * (ny - 1) * (nx - 1), 4))
    count = 0
    cross = np.zeros(4, dtype=np.bool_)
    for i in range(ny - 1):
        for j in range(nx - 1):
            v00, v01 = V[i, j], V[i, j + 1]
            v10, v11 = V[i + 1, j], V[i + 1, j + 1]
            s00, s01, s10, s11 = v00 > 0, v01 > 0, v10 > 0, v11 > 0
            cross[0] = s00 != s01
            cross[1] = s01 != s11
            cross[2] = s10 != s11
            cross[3] = s00 != s10
            ncross = 0
            for e in range(4):
                if cross[e]:
                    ncross += 1
            if ncross == 0:
                continue
            if ncross == 2:
                first = -1
                second = -1
                for e in range(4):
                    if cross[e]:
                        if first < 0:
                            first = e
                        else:
                            second = e
                pairs = ((first, second), (-1, -1))
            else:
                centre = 0.25 * (v00 + v01 + v10 + v11)
                if (centre > 0) == s00:
                    pairs = ((0, 1), (2, 3))
                else:
                    pairs = ((0, 3), (1, 2))
            for p in range(2):
                a, b = pairs[p]
                if a < 0:
                    continue
                xa, ya = _edge_point(a, i, j, v00, v01, v11, v10, x0, y0, dx, dy)
                xb, yb = _edge_point(b, i, j, v00, v01, v11, v10, x0, y0, dx, dy)
                out[count, 0] = xa
                out[count, 1] = ya
                out[count, 2] = xb
                out[count, 3] = yb
                count += 1
    return out[:count]


def _marching_np(V, x0, y0, dx, dy):
    ny, nx = V.shape
    v00, v01 = V[:-1, :-1], V[:-1, 1:]
    v10, v11 = V[1:, :-1], V[1:, 1:]
    s00, s01, s10, s11 = v00 > 0, v01 > 0, v10 > 0, v11 > 0
    cross = np.stack([s00 != s01, s01 != s11, s10 != s11, s00 != s10], axis=-1)
    ii, jj = np.meshgrid(np.arange(ny - 1), np.arange(nx - 1), indexing="ij")
    with np.errstate(divide="ignore", invalid="ignore"):
        px = np.stack([
            x0 + (jj + v00 / (v00 - v01)) * dx,
            x0 + (jj + 1) * dx + 0 * v00,
            x0 + (jj + v10 / (v10 - v11)) * dx,
            x0 + jj * dx + 0 * v00,
        ], axis=-1)
        py = np.stack([
            y0 + ii * dy + 0 * v00,
            y0 + (ii + v01 / (v01 - v11)) * dy,
            y0 + (ii + 1) * dy + 0 * v00,
            y0 + (ii + v00 / (v00 - v10)) * dy,
        ], axis=-1)
    ncross = cross.sum(axis=-1)
    first = np.argmax(cross, axis=-1)
    last = 3 - np.argmax(cross[..., ::-1], axis=-1)
    centre_pos = (0.25 * (v00 + v01 + v10 + v11)) > 0
    joined = centre_pos == s00
    a1 = np.where(ncross == 4, 0, first)
    b1 = np.where(ncross == 4, np.where(joined, 1, 3), last)
    a2 = np.where(joined, 2, 1)
    b2 = np.where(joined, 3, 2)

    def take(idx):
        return (np.take_along_axis(px, idx[..., None], -1)[..., 0],
                np.take_along_axis(py, idx[..., None], -1)[..., 0])

    xa1, ya1 = take(a1)
    xb1, yb1 = take(b1)
    xa2, ya2 = take(a2)
    xb2, yb2 = take(b2)
    segs = np.stack([
        np.stack([xa1, ya1, xb1, yb1], axis=-1),
        np.stack([xa2, ya2, xb2, yb2], axis=-1),
    ], axis=-2)
    valid = np.stack([ncross >= 2, ncross == 4], axis=-1)
    return segs[valid].reshape(-1, 4)


def marching_squares_numba(V, x0, y0, dx, dy):
    return _marching_nb(np.ascontiguousarray(V, dtype=np.float64), float(x0), float(y0), float(dx), float(dy))


def marching_squares_numpy(V, x0, y0, dx, dy):
    return _marching_np(np.asarray(V, dtype=np.float64), float(x0), float(y0), float(dx), float(dy))


def marching_squares(V, x0, y0, dx, dy):
    """Zero-contour segments ``(x1, y1, x2, y2)`` of samples ``V[i, j]`` taken
    at ``(x0 + j dx, y0 + i dy)``; saddles are resolved by the cell mean."""
    fn = marching_squares_numba if USE_NUMBA else marching_squares_numpy
    return fn(V, x0, y0, dx, dy)


# -- simple-curve test -------------------------------------------------------

@njit(cache=True)
def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


@njit(cache=True)
def _self_intersects_nb(x, y):
    m = x.shape[0]
    for i in range(m):
        i2 = (i + 1) % m
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            j2 = (j + 1) % m
            o1 = _orient(x[i], y[i], x[i2], y[i2], x[j], y[j])
            o2 = _orient(x[i], y[i], x[i2], y[i2], x[j2], y[j2])
            if o1 * o2 >= 0:
                continue
            o3 = _orient(x[j], y[j], x[j2], y[j2], x[i], y[i])
            o4 = _orient(x[j], y[j], x[j2], y[j2], x[i2], y[i2])
            if o3 * o4 < 0:
                return True
    return False


def _self_intersects_np(x, y):
    m = len(x)
    x2, y2 = np.roll(x, -1), np.roll(y, -1)
    idx = np.arange(m)
    for i in range(m):
        j = idx[i + 2:]
        if i == 0:
            j = j[j != m - 1]
        if not len(j):
            continue
        o1 = (x2[i] - x[i]) * (y[j] - y[i]) - (y2[i] - y[i]) * (x[j] - x[i])
        o2 = (x2[i] - x[i]) * (y2[j] - y[i]) - (y2[i] - y[i]) * (x2[j] - x[i])
        o3 = (x2[j] - x[j]) * (y[i] - y[j]) - (y2[j] - y[j]) * (x[i] - x[j])
        o4 = (x2[j] - x[j]) * (y2[i] - y[j]) - (y2[j] - y[j]) * (x2[i] - x[j])
        if np.any((o1 * o2 < 0) & (o3 * o4 < 0)):
            return True
    return False


def polyline_self_intersects(points) -> bool:
    """True when two non-adjacent edges of the closed polygon cross."""
    pts = np.asarray(points, dtype=np.complex128)
    x = np.ascontiguousarray(pts.real)
    y = np.ascontiguousarray(pts.imag)
    fn = _self_intersects_nb if USE_NUMBA else _self_intersects_np
    return bool(fn(x, y))
