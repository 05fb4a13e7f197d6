"""Kernel backend selection.

The table kernels exist twice: numba-jitted and pure numpy. The active
backend is chosen once at import time:

  QUASIK_BACKEND=numba   require the jitted kernels, fail if numba is absent
  QUASIK_BACKEND=numpy   force the pure numpy fallback
  unset                  numba when importable, numpy otherwise

benchmarks/bench_kernels.py compares the two directly.
"""

import os


def _load():
    choice = os.environ.get("QUASIK_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(
            "QUASIK_BACKEND must be 'numba' or 'numpy', got %r" % choice)
    if choice == "numpy":
        from . import _kernels_numpy as mod
        return mod, "numpy"
    try:
        from . import _kernels_numba as mod
        return mod, "numba"
    except ImportError:
        if choice == "numba":
            raise
        from . import _kernels_numpy as mod
        return mod, "numpy"


_MOD, BACKEND = _load()

find_rows = _MOD.find_rows
mult_table = _MOD.mult_table
minimal_tuple_mask = _MOD.minimal_tuple_mask
class_coeffs = _MOD.class_coeffs
point_orbits = _MOD.point_orbits


def backend_name():
    """Name of the active kernel backend, 'numba' or 'numpy'."""
    return BACKEND
