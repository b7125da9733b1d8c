"""Numerical backend selection.

Hot kernels exist in two implementations: numba-compiled scalar loops
(`_kernels_nb`) and vectorized numpy/scipy (`_kernels_np`).  The active
implementation is chosen once, at import time, from the environment
variable ``COPGLMM_BACKEND``:

* ``auto`` (default) -- numba if importable, else numpy
* ``numba``          -- require numba, fail loudly if missing
* ``numpy``          -- force the vectorized fallback

Both implementations are importable side by side (the benchmark suite
compares them); the flag only controls which one the library routes
through.
"""

import os

ENV_VAR = "COPGLMM_BACKEND"
_CHOICES = ("auto", "numba", "numpy")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only on stripped installs
    numba = None
    HAVE_NUMBA = False


def requested_backend():
    """Value of the backend env var, validated."""
    val = os.environ.get(ENV_VAR, "auto").strip().lower()
    if val not in _CHOICES:
        raise ValueError(
            f"{ENV_VAR} must be one of {_CHOICES}, got {val!r}"
        )
    return val


def active_backend():
    """Resolve 'auto' against numba availability."""
    val = requested_backend()
    if val == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    if val == "numba" and not HAVE_NUMBA:
        raise ImportError(
            f"{ENV_VAR}=numba but numba is not importable"
        )
    return val


if HAVE_NUMBA:

    def jit_scalar(func):
        """Compile a scalar math helper for use inside numba kernels."""
        return numba.njit(cache=True)(func)

    def jit_kernel(func):
        """Compile an array kernel."""
        return numba.njit(cache=True)(func)

else:  # pragma: no cover

    def jit_scalar(func):
        return func

    def jit_kernel(func):
        return func
