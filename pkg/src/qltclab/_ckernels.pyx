# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) search kernels.

Signatures and results match ``_pykernels`` exactly; see that module for the
bit layout.  The inner loops run without the GIL.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint8_t, uint16_t, uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

NAME = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def rref(uint64_t[:, ::1] words, Py_ssize_t pivot_cols):
    cdef Py_ssize_t nrows = words.shape[0], nw = words.shape[1]
    cdef Py_ssize_t col, r, prow = 0, found, w, k
    cdef uint64_t b, tmp
    pivots = []
    for col in range(pivot_cols):
        if prow == nrows:
            break
        w = col >> 6
        b = (<uint64_t>1) << (col & 63)
        found = -1
        for r in range(prow, nrows):
            if words[r, w] & b:
                found = r
                break
        if found < 0:
            continue
        if found != prow:
            for k in range(nw):
                tmp = words[prow, k]
                words[prow, k] = words[found, k]
                words[found, k] = tmp
        with nogil:
            for r in range(nrows):
                if r != prow and (words[r, w] & b):
                    for k in range(nw):
                        words[r, k] ^= words[prow, k]
        pivots.append(col)
        prow += 1
    return pivots


def span_min_weight(const uint64_t[:, ::1] basis, int skip):
    cdef int k = basis.shape[0]
    cdef Py_ssize_t nw = basis.shape[1], j
    cdef uint64_t i, total, threshold
    cdef int best = -1, wt, bit
    if skip >= k:
        return -1
    cdef uint64_t *acc = <uint64_t *>malloc(max(nw, 1) * sizeof(uint64_t))
    try:
        with nogil:
            for j in range(nw):
                acc[j] = 0
            total = (<uint64_t>1) << k
            threshold = (<uint64_t>1) << skip
            i = 1
            while i < total:
                bit = __builtin_ctzll(i)
                for j in range(nw):
                    acc[j] ^= basis[bit, j]
                # Gray code after step i has its high part nonzero iff i >= 2**skip
                if i >= threshold:
                    wt = 0
                    for j in range(nw):
                        wt += __builtin_popcountll(acc[j])
                    if best < 0 or wt < best:
                        best = wt
                i += 1
    finally:
        free(acc)
    return best


cdef bint _search(const uint64_t[:, ::1] checks, const uint64_t[:, ::1] tails, int w,
                  bint need_tail, uint64_t *cstack, uint64_t *tstack,
                  int *idx) noexcept nogil:
    cdef Py_ssize_t n = checks.shape[0], wc = checks.shape[1], wt = tails.shape[1]
    cdef Py_ssize_t j, q
    cdef int depth = 0
    cdef bint ok
    # cstack/tstack level d holds the XOR of the first d chosen columns
    for q in range(wc):
        cstack[q] = 0
    for q in range(wt):
        tstack[q] = 0
    idx[0] = -1
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] > n - (w - depth):
            depth -= 1
            continue
        j = idx[depth]
        for q in range(wc):
            cstack[(depth + 1) * wc + q] = cstack[depth * wc + q] ^ checks[j, q]
        for q in range(wt):
            tstack[(depth + 1) * wt + q] = tstack[depth * wt + q] ^ tails[j, q]
        if depth == w - 1:
            ok = True
            for q in range(wc):
                if cstack[w * wc + q]:
                    ok = False
                    break
            if ok and need_tail:
                ok = False
                for q in range(wt):
                    if tstack[w * wt + q]:
                        ok = True
                        break
            if ok:
                return True
        else:
            depth += 1
            idx[depth] = j
    return False


def low_weight_search(const uint64_t[:, ::1] checks, const uint64_t[:, ::1] tails,
                      int w_min, int w_max, bint need_tail):
    cdef Py_ssize_t n = checks.shape[0], wc = checks.shape[1], wt = tails.shape[1]
    cdef int w, top = w_max if w_max < n else <int>n
    cdef bint hit
    if top < 1:
        return -1
    cdef uint64_t *cstack = <uint64_t *>malloc((top + 1) * max(wc, 1) * sizeof(uint64_t))
    cdef uint64_t *tstack = <uint64_t *>malloc((top + 1) * max(wt, 1) * sizeof(uint64_t))
    cdef int *idx = <int *>malloc((top + 1) * sizeof(int))
    try:
        for w in range(max(w_min, 1), top + 1):
            with nogil:
                hit = _search(checks, tails, w, need_tail, cstack, tstack, idx)
            if hit:
                return w
    finally:
        free(cstack)
        free(tstack)
        free(idx)
    return -1


def coset_bfs(gens, int r):
    cdef const uint64_t[::1] g = np.unique(np.asarray(gens, dtype=np.uint64))
    cdef Py_ssize_t ng = g.shape[0], size = (<Py_ssize_t>1) << r
    dist_arr = np.full(size, 255, dtype=np.uint8)
    cdef uint8_t[::1] dist = dist_arr
    queue_arr = np.empty(size, dtype=np.uint64)
    cdef uint64_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 1, t
    cdef uint64_t v, u
    cdef uint8_t dv
    dist[0] = 0
    queue[0] = 0
    with nogil:
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[v]
            if dv >= 254:
                continue
            for t in range(ng):
                u = v ^ g[t]
                if dist[u] == 255:
                    dist[u] = dv + 1
                    queue[tail] = u
                    tail += 1
    return dist_arr


def span_weights(const uint64_t[:, ::1] tcols):
    cdef int r = tcols.shape[0]
    cdef Py_ssize_t nw = tcols.shape[1], j
    cdef uint64_t i, total = (<uint64_t>1) << r
    cdef int bit, wt
    out_arr = np.zeros(total, dtype=np.uint16)
    cdef uint16_t[::1] out = out_arr
    cdef uint64_t *acc = <uint64_t *>malloc(max(nw, 1) * sizeof(uint64_t))
    try:
        with nogil:
            for j in range(nw):
                acc[j] = 0
            i = 1
            while i < total:
                bit = __builtin_ctzll(i)
                for j in range(nw):
                    acc[j] ^= tcols[bit, j]
                wt = 0
                for j in range(nw):
                    wt += __builtin_popcountll(acc[j])
                # Gray-code position i holds the subset mask i ^ (i >> 1)
                out[i ^ (i >> 1)] = wt
                i += 1
    finally:
        free(acc)
    return out_arr
