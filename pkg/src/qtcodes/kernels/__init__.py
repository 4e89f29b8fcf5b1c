"""Backend dispatch for the enumeration kernels.

The environment variable QTCODES_BACKEND picks the implementation:
"numba" requires the compiled backend, "numpy" forces the pure-numpy
one, and "auto" (the default) takes numba when it imports and falls
back to numpy otherwise.  Both backends share the packed-word contract
described in numpy_impl and return bit-identical arrays.
"""

from __future__ import annotations

import os

import numpy as np

from . import numpy_impl

_choice = os.environ.get("QTCODES_BACKEND", "auto").strip().lower() or "auto"
if _choice == "numpy":
    _impl = numpy_impl
elif _choice == "numba":
    from . import numba_impl as _impl
elif _choice == "auto":
    try:
        from . import numba_impl as _impl
    except ImportError:
        _impl = numpy_impl
else:
    raise RuntimeError(
        f"QTCODES_BACKEND must be 'numba', 'numpy' or 'auto', got {_choice!r}"
    )

BACKEND = "numpy" if _impl is numpy_impl else "numba"

span_codewords = _impl.span_codewords
span_min_lee = _impl.span_min_lee
oracle_codewords = _impl.oracle_codewords
lee_weights = _impl.lee_weights


def implementations() -> dict:
    """Every importable backend, name to module; used by the benchmark."""
    impls = {"numpy": numpy_impl}
    try:
        from . import numba_impl

        impls["numba"] = numba_impl
    except ImportError:
        pass
    return impls


def sort_unique(arr_a, arr_b):
    """Deduplicate packed-word pair arrays into a canonical sorted order."""
    order = np.lexsort((arr_b, arr_a))
    a = arr_a[order]
    b = arr_b[order]
    if len(a) == 0:
        return a, b
    keep = np.ones(len(a), bool)
    keep[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1])
    return a[keep], b[keep]


def warm_up():
    """Trigger compilation of the active backend on tiny inputs."""
    ra = np.array([1], np.uint64)
    rb = np.array([0], np.uint64)
    span_codewords(ra, rb)
    span_min_lee(ra, rb)
    oracle_codewords(ra, rb, 1, 1)
    lee_weights(ra, rb)
