"""Backend selection for the GF(2) search kernels.

The compiled extension is used when it imports; setting the environment
variable ``QLTC_PURE_PYTHON=1`` forces the numpy fallback.  Both backends
return identical results, so nothing downstream depends on the choice.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

if os.environ.get("QLTC_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND: str = _impl.NAME


def _c(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.uint64)


def rref(words: np.ndarray, pivot_cols: int, impl=None) -> list[int]:
    """In-place reduced row echelon form; ``words`` must be C-contiguous uint64."""
    return (impl or _impl).rref(words, pivot_cols)


def span_min_weight(basis: np.ndarray, skip: int, impl=None) -> int:
    return (impl or _impl).span_min_weight(_c(basis), skip)


def low_weight_search(checks, tails, w_min, w_max, need_tail, impl=None) -> int:
    return (impl or _impl).low_weight_search(_c(checks), _c(tails), w_min, w_max, need_tail)


def coset_bfs(gens: np.ndarray, r: int, impl=None) -> np.ndarray:
    return (impl or _impl).coset_bfs(np.asarray(gens, dtype=np.uint64), r)


def span_weights(tcols: np.ndarray, impl=None) -> np.ndarray:
    return (impl or _impl).span_weights(_c(tcols))


def available_backends() -> dict:
    """Map backend name to module for every backend that imports."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
