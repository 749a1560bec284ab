"""Kernel compilation switch.

Hot loops are written once as plain numpy/Python and compiled with
``numba.njit`` when numba is importable.  Setting ``GIRTH_PURE_PYTHON=1``
(or ``NUMBA_DISABLE_JIT=1``) keeps the interpreted versions, which is the
reference path used by the equivalence tests and the benchmark.
"""
from __future__ import annotations

import os

_FLAG = os.environ.get("GIRTH_PURE_PYTHON", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and _FLAG not in {"1", "true", "yes", "on"}


def kernel(fn):
    """Compile ``fn`` in nopython mode unless the pure path is selected."""
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def pure(fn):
    """Return the interpreted version of a (possibly compiled) kernel."""
    return getattr(fn, "py_func", fn)
