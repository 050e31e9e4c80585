"""Brute-force reference implementations on dense uint8 arrays.

Nothing here touches the packed kernels; every answer comes from
enumerating vectors or from a plain dense elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def dense(m) -> np.ndarray:
    return np.asarray(m.to_dense() if hasattr(m, "to_dense") else m, dtype=np.uint8) & 1


def all_vectors(n: int) -> np.ndarray:
    """Every vector of F_2^n, one per row, in counting order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def gf2_rank(a) -> int:
    a = dense(a).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        hit = [i for i in range(r, rows) if a[i, c]]
        if not hit:
            continue
        a[[r, hit[0]]] = a[[hit[0], r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def kernel(h) -> np.ndarray:
    h = dense(h)
    vs = all_vectors(h.shape[1])
    return vs[~((vs @ h.T) % 2).any(axis=1)]


def span(rows) -> np.ndarray:
    rows = dense(rows)
    k, n = rows.shape
    coeffs = all_vectors(k)
    return np.unique((coeffs @ rows) % 2, axis=0) if k else np.zeros((1, n), dtype=np.uint8)


def distance(h):
    words = kernel(h)
    wts = words.sum(axis=1)
    wts = wts[wts > 0]
    return int(wts.min()) if len(wts) else math.inf


def _as_ints(vs: np.ndarray) -> np.ndarray:
    return (vs.astype(np.int64) << np.arange(vs.shape[1], dtype=np.int64)).sum(axis=1)


def soundness(h) -> Fraction:
    """``min over x not in C of (|Hx|/m) / (d(x, C)/n)`` by full enumeration.

    ``d(x, C)`` is the minimum over every codeword, computed for all ``2^n``
    words at once.
    """
    h = dense(h)
    m, n = h.shape
    vs = all_vectors(n)
    syn = ((vs.astype(np.int64) @ h.T) % 2).sum(axis=1)
    words = _as_ints(vs)
    dist = np.full(len(words), n + 1, dtype=np.int64)
    for c in _as_ints(kernel(h)):
        np.minimum(dist, np.bitwise_count(words ^ c).astype(np.int64), out=dist)
    best = None
    for s, d in zip(syn[syn > 0].tolist(), dist[syn > 0].tolist()):
        val = Fraction(s * n, m * d)
        if best is None or val < best:
            best = val
    return best


def leader_weights(h) -> dict[tuple[int, ...], int]:
    h = dense(h)
    out: dict[tuple[int, ...], int] = {}
    for x in all_vectors(h.shape[1]):
        s = tuple(int(b) for b in (h @ x) % 2)
        w = int(x.sum())
        if s not in out or w < out[s]:
            out[s] = w
    return out


def css_distances(h_x, h_z):
    """``(d_x, d_z)``: ``d_x`` over ``ker h_z`` minus ``row(h_x)`` and vice versa."""

    def one(checks, stabs):
        ker = kernel(checks)
        stab = {tuple(r) for r in span(stabs)}
        wts = [int(v.sum()) for v in ker if tuple(v) not in stab]
        return min(wts) if wts else math.inf

    return one(h_z, h_x), one(h_x, h_z)


def random_dense(rng, rows: int, cols: int) -> np.ndarray:
    return rng.integers(0, 2, (rows, cols), dtype=np.uint8)


def matmul(a, b) -> np.ndarray:
    return (dense(a).astype(np.int64) @ dense(b).astype(np.int64)) % 2


