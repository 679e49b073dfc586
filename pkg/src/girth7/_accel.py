"""numba switch.

Set ``GIRTH7_DISABLE_JIT=1`` to run every kernel on its pure-numpy path.
``GIRTH7_THREADS`` bounds the number of numba worker threads; values above 1
enable the parallel girth kernel.  ``GIRTH7_BACKEND`` (numba or numpy)
picks the girth kernel explicitly.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


JIT_DISABLED = _flag("GIRTH7_DISABLE_JIT")
HAVE_NUMBA = numba is not None and not JIT_DISABLED


def thread_count() -> int:
    try:
        n = int(os.environ.get("GIRTH7_THREADS", "1"))
    except ValueError:
        n = 1
    n = max(1, n)
    if HAVE_NUMBA:
        n = min(n, numba.config.NUMBA_NUM_THREADS)
    return n


def njit(*args, **kwargs):
    """``numba.njit`` when available, identity otherwise."""
    if numba is None:
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
    return numba.njit(*args, **kwargs)


if numba is not None:
    prange = numba.prange
else:  # pragma: no cover
    prange = range


def default_backend() -> str:
    forced = os.environ.get("GIRTH7_BACKEND", "").strip().lower()
    if forced == "numpy" or (forced == "numba" and numba is not None):
        return forced
    return "numba" if HAVE_NUMBA else "numpy"
