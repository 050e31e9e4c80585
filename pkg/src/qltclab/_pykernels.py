"""Pure-Python/numpy implementations of the GF(2) search kernels.

Every function here has a compiled twin in ``_ckernels.pyx`` with an
identical signature and identical results; :mod:`qltclab.kernels` picks one
at import time.  Bit vectors are rows of ``uint64`` words, bit ``j`` of a
vector living in word ``j >> 6`` at position ``j & 63``.
"""

from __future__ import annotations

import itertools

import numpy as np

NAME = "python"

_CHUNK_BITS = 16


def rref(words: np.ndarray, pivot_cols: int) -> list[int]:
    """Gauss-Jordan eliminate ``words`` in place; return the pivot columns.

    Pivots are searched only among the first ``pivot_cols`` columns, left to
    right, taking the first row at or below the current pivot row.  Row
    operations act on the full row width, so trailing columns can carry an
    augmented block.
    """
    nrows = words.shape[0]
    pivots: list[int] = []
    prow = 0
    for col in range(pivot_cols):
        if prow == nrows:
            break
        w, b = col >> 6, np.uint64(1) << np.uint64(col & 63)
        hits = np.nonzero(words[prow:, w] & b)[0]
        if hits.size == 0:
            continue
        found = prow + int(hits[0])
        if found != prow:
            words[[prow, found]] = words[[found, prow]]
        mask = (words[:, w] & b) != 0
        mask[prow] = False
        words[mask] ^= words[prow]
        pivots.append(col)
        prow += 1
    return pivots


def _popcount_rows(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count(block).sum(axis=-1, dtype=np.int64)


def _span_table(basis: np.ndarray) -> np.ndarray:
    """All 2^K subset sums of ``basis`` indexed by subset bitmask."""
    k, nw = basis.shape
    table = np.zeros((1 << k, nw), dtype=np.uint64)
    for i in range(k):
        half = 1 << i
        table[half : 2 * half] = table[:half] ^ basis[i]
    return table


def span_min_weight(basis: np.ndarray, skip: int) -> int:
    """Minimum weight of a subset sum that uses at least one row ``>= skip``.

    Returns -1 when no such subset exists (``skip == len(basis)``).
    """
    k = basis.shape[0]
    if skip >= k:
        return -1
    low = min(k, _CHUNK_BITS)
    table = _span_table(basis[:low])
    high = basis[low:]
    best = -1
    for hi_mask in range(1 << (k - low)):
        offset = np.zeros(basis.shape[1], dtype=np.uint64)
        for i in range(k - low):
            if hi_mask >> i & 1:
                offset ^= high[i]
        weights = _popcount_rows(table ^ offset)
        # subset index = hi_mask << low | lo; it qualifies iff index >= 2**skip
        start = max(0, (1 << skip) - (hi_mask << low))
        if start >= table.shape[0]:
            continue
        cand = int(weights[start:].min())
        if best < 0 or cand < best:
            best = cand
    return best


def _as_ints(block: np.ndarray) -> list[int]:
    return [int.from_bytes(row.astype("<u8").tobytes(), "little") for row in block]


def low_weight_search(
    checks: np.ndarray,
    tails: np.ndarray,
    w_min: int,
    w_max: int,
    need_tail: bool,
) -> int:
    """Smallest ``w`` in ``[w_min, w_max]`` admitting ``w`` distinct columns
    whose ``checks`` parts XOR to zero and, if ``need_tail``, whose ``tails``
    parts XOR to something nonzero.  Returns -1 if no such weight exists.
    """
    n = checks.shape[0]
    cvals = _as_ints(checks)
    tvals = _as_ints(tails) if tails.shape[1] else [0] * n
    by_check: dict[int, list[tuple[int, int]]] = {}
    for j in range(n):
        by_check.setdefault(cvals[j], []).append((j, tvals[j]))
    for w in range(max(w_min, 1), min(w_max, n) + 1):
        for combo in itertools.combinations(range(n), w - 1):
            acc_c = 0
            acc_t = 0
            for j in combo:
                acc_c ^= cvals[j]
                acc_t ^= tvals[j]
            last = combo[-1] if combo else -1
            for j, t in by_check.get(acc_c, ()):
                if j > last and (not need_tail or t != acc_t):
                    return w
    return -1


def coset_bfs(gens: np.ndarray, r: int) -> np.ndarray:
    """Breadth-first distances from 0 in the Cayley graph of F_2^r.

    ``gens`` holds one r-bit integer per generator.  Unreached vertices keep
    the value 255.
    """
    size = 1 << r
    dist = np.full(size, 255, dtype=np.uint8)
    dist[0] = 0
    gens = np.unique(np.asarray(gens, dtype=np.uint64))
    gens = gens[gens != 0]
    frontier = np.zeros(1, dtype=np.uint64)
    level = 0
    while frontier.size and level < 254:
        level += 1
        found = []
        for g in gens:
            nxt = frontier ^ g
            fresh = nxt[dist[nxt] == 255]
            if fresh.size:
                dist[fresh] = level
                found.append(fresh)
        frontier = np.concatenate(found) if found else np.zeros(0, dtype=np.uint64)
    return dist


def span_weights(tcols: np.ndarray) -> np.ndarray:
    """Weights of all 2^r subset sums of ``tcols``, indexed by bitmask."""
    return _popcount_rows(_span_table(tcols)).astype(np.uint16)
