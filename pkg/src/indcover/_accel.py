"""Switch between numba-compiled kernels and their plain fallbacks.

Set ``INDCOVER_DISABLE_JIT=1`` before import to run every kernel through the
pure Python / numpy path. Both paths must return identical results.
"""
import os

_FALSEY = {"", "0", "false", "no", "off"}

JIT_DISABLED = os.environ.get("INDCOVER_DISABLE_JIT", "").strip().lower() not in _FALSEY

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

JIT_ENABLED = numba is not None and not JIT_DISABLED


def njit(func):
    """Compile ``func`` with numba if available, else return it untouched."""
    if numba is None:  # pragma: no cover
        return func
    return numba.njit(cache=True, nogil=True)(func)
