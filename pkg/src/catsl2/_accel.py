"""Backend selection for the numeric kernels.

Set ``CATSL2_NO_NUMBA=1`` to force the pure-numpy kernels. If numba cannot be
imported the numpy kernels are used silently.
"""
from __future__ import annotations

import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

BACKENDS = ("numba", "numpy")


def numba_disabled() -> bool:
    return os.environ.get("CATSL2_NO_NUMBA", "").strip() not in ("", "0")


def default_backend() -> str:
    return "numba" if HAVE_NUMBA and not numba_disabled() else "numpy"


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        return "numpy"
    return backend


def njit(fn):
    """``numba.njit(cache=True)`` when available, identity otherwise."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn
