"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The first numba call compiles (or loads the cache) and is excluded.
"""
import argparse
import time

import numpy as np

from reslab import kernels


def best_of(fn, repeat):
    fn()  # warm up / compile
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(7)
    c = rng.normal(size=41) + 1j * rng.normal(size=41)
    zeta = rng.uniform(-1, 1, 4000) + 1j * rng.uniform(-1, 1, 4000)
    tau = 0.3 + 1.1j
    A = np.array([0, 1, 0.3], dtype=np.complex128)
    B = np.array([1], dtype=np.complex128)
    D = np.array([1, 0.6], dtype=np.complex128)
    xs = np.linspace(-2, 2, 512)
    X, Y = np.meshgrid(xs, xs)
    V = np.ascontiguousarray(X**2 + Y**2 - 1.0 + 0.3 * np.sin(3 * X))
    h = 4.0 / 511
    t = np.linspace(0, 2 * np.pi, 3000, endpoint=False)
    loop = np.exp(1j * t) * (1 + 0.2 * np.cos(5 * t))
    return [
        ("aberth deg 40", lambda k: getattr(kernels, f"aberth_{k}")(c)),
        ("theta 4000 pts", lambda k: getattr(kernels, f"theta_sum_{k}")(zeta, tau, 12)),
        ("polar cauchy 256x1024", lambda k: getattr(kernels, f"polar_cauchy_sum_{k}")(
            A, B, D, 2 + 0.5j, -1.8 + 1j, 0j, 0j, False, 256, 1024)),
        ("polar moments N=4", lambda k: getattr(kernels, f"polar_moment_sums_{k}")(A, B, D, 4, 128, 512)),
        ("marching squares 512^2", lambda k: getattr(kernels, f"marching_squares_{k}")(V, -2.0, -2.0, h, h)),
        ("self-intersection 3000", lambda k: kernels._self_intersects_nb(loop.real, loop.imag) if k == "numba"
         else kernels._self_intersects_np(loop.real, loop.imag)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':<26}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}")
    for name, run in cases():
        tn = best_of(lambda: run("numba"), args.repeat)
        tp = best_of(lambda: run("numpy"), args.repeat)
        print(f"{name:<26}{tn * 1e3:>12.2f}{tp * 1e3:>12.2f}{tp / tn:>9.1f}x")


if __name__ == "__main__":
    main()
