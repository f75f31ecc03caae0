"""Backend switch for the hot table loops.

``RINGLAB_BACKEND=numpy`` forces the pure-numpy implementations; otherwise
the numba versions are used whenever numba imports cleanly.
"""

import logging
import os

import numpy as np

from . import _numpy

log = logging.getLogger(__name__)

KERNELS = (
    "first_assoc_violation",
    "first_left_distrib_violation",
    "first_right_distrib_violation",
    "nilpotent_mask",
    "sandwich_left",
    "sandwich_right",
    "first_symmetric_violation",
    "additive_closure",
    "triple_sandwich",
    "qa_first_violation",
)


def _load_numba():
    try:
        from . import _numba
    except ImportError as exc:  # pragma: no cover - depends on environment
        log.warning("numba unavailable (%s); using numpy kernels", exc)
        return None
    return _numba


_requested = os.environ.get("RINGLAB_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(f"RINGLAB_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

numba_impl = _load_numba() if _requested == "numba" else None
numpy_impl = _numpy
BACKEND = "numba" if numba_impl is not None else "numpy"
_impl = numba_impl or numpy_impl


def _as_index(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def _as_mask(m):
    return np.ascontiguousarray(m, dtype=np.bool_)


def first_assoc_violation(op):
    return tuple(int(v) for v in _impl.first_assoc_violation(_as_index(op)))


def first_left_distrib_violation(mul, add):
    return tuple(int(v) for v in _impl.first_left_distrib_violation(_as_index(mul), _as_index(add)))


def first_right_distrib_violation(mul, add):
    return tuple(int(v) for v in _impl.first_right_distrib_violation(_as_index(mul), _as_index(add)))


def nilpotent_mask(mul, zero):
    return _impl.nilpotent_mask(_as_index(mul), int(zero))


def sandwich_left(mul, target, rows):
    return _impl.sandwich_left(_as_index(mul), _as_mask(target), _as_index(rows))


def sandwich_right(mul, target, rows):
    return _impl.sandwich_right(_as_index(mul), _as_mask(target), _as_index(rows))


def first_symmetric_violation(mul, zero):
    return tuple(int(v) for v in _impl.first_symmetric_violation(_as_index(mul), int(zero)))


def additive_closure(add, mask):
    return _impl.additive_closure(_as_index(add), _as_mask(mask))


def triple_sandwich(mul, target, sand, reps):
    return _impl.triple_sandwich(_as_index(mul), _as_mask(target), _as_mask(sand), _as_index(reps))


def qa_first_violation(mul, add, zero, zl, degree):
    f, g = _impl.qa_first_violation(_as_index(mul), _as_index(add), int(zero), _as_mask(zl), int(degree))
    return int(f), int(g)
