"""Numba/numpy backend selection for the hot kernels.

The environment variable ``UDCERT_BACKEND`` picks the execution path:

* ``auto`` (default) -- compile with numba when it is importable,
  otherwise fall back to plain numpy.
* ``numba``          -- require numba; raise if it is missing.
* ``numpy``          -- force the uncompiled path (useful for debugging
  and for benchmarking the compiled speedup).

Kernels are written once in nopython-compatible numpy; ``jit_kernel``
returns either the compiled or the plain function depending on the
active backend.  Both variants stay importable so tests and benchmarks
can compare them directly.
"""

import os

_ENV_VAR = "UDCERT_BACKEND"

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only on stripped installs
    numba = None
    HAVE_NUMBA = False


def _resolve() -> str:
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise RuntimeError(
            f"{_ENV_VAR} must be one of auto|numba|numpy, got {choice!r}"
        )
    if choice == "numpy":
        return "numpy"
    if choice == "numba" and not HAVE_NUMBA:
        raise RuntimeError(f"{_ENV_VAR}=numba but numba is not importable")
    return "numba" if HAVE_NUMBA else "numpy"


ACTIVE_BACKEND = _resolve()


def compile_kernel(func):
    """numba-compile ``func`` (nopython, cached); None if numba is absent."""
    if not HAVE_NUMBA:
        return None
    return numba.njit(cache=True)(func)


def jit_kernel(func):
    """Return the variant of ``func`` matching the active backend."""
    if ACTIVE_BACKEND == "numba":
        return compile_kernel(func)
    return func
