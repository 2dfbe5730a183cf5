"""Optional numba acceleration.

Set ``RESLAB_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is installed.  ``RESLAB_THREADS`` caps the numba thread pool.
"""
import os

_FLAG = os.environ.get("RESLAB_DISABLE_NUMBA", "").strip().lower()
DISABLED = _FLAG in {"1", "true", "yes", "on"}

try:
    import numba
    from numba import njit, prange

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is normally installed
    numba = None
    HAS_NUMBA = False
    prange = range

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


USE_NUMBA = HAS_NUMBA and not DISABLED


def thread_cap() -> int | None:
    raw = os.environ.get("RESLAB_THREADS", "").strip()
    if not raw:
        return None
    try:
        return max(1, int(raw))
    except ValueError:
        return None


if HAS_NUMBA:
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # avoids probing an outdated TBB install on import
        numba.config.THREADING_LAYER = "workqueue"
    _cap = thread_cap()
    if _cap is not None:
        numba.set_num_threads(min(_cap, numba.config.NUMBA_NUM_THREADS))
