"""Dense bit-packed linear algebra over GF(2).

Matrices are stored row-major as ``uint64`` words with column ``j`` at bit
``j & 63`` of word ``j >> 6``.  Padding bits past the last column are always
zero, so word-level equality is matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import RankDeficient, ShapeMismatch

__all__ = [
    "BinaryMatrix",
    "StandardForm",
    "rank",
    "kernel_basis",
    "row_basis",
    "standard_form",
    "kronecker",
    "mat_mul",
    "transpose",
    "in_row_space",
    "independent_rows",
]


def _nwords(cols: int) -> int:
    return max(1, (cols + 63) >> 6)


def _pack(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    nw = _nwords(cols)
    padded = np.zeros((rows, nw * 64), dtype=np.uint8)
    padded[:, :cols] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(rows, nw)


def _unpack(words: np.ndarray, cols: int) -> np.ndarray:
    rows = words.shape[0]
    if rows == 0:
        return np.zeros((0, cols), dtype=np.uint8)
    raw = np.ascontiguousarray(words.astype("<u8")).view(np.uint8).reshape(rows, -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols]


class BinaryMatrix:
    """Immutable GF(2) matrix with word-packed rows.

    Construct with :meth:`from_dense`, :meth:`zeros`, :meth:`identity` or
    :meth:`from_words`.  Empty shapes (0 rows and/or 0 columns) are legal.
    """

    __slots__ = ("_words", "_cols")

    def __init__(self, words: np.ndarray, cols: int):
        words = np.array(words, dtype=np.uint64, copy=True, order="C")
        if words.ndim != 2 or words.shape[1] != _nwords(cols):
            raise ShapeMismatch(f"word array of shape {words.shape} does not fit {cols} columns")
        tail = cols & 63
        if tail and words.shape[0]:
            words[:, -1] &= np.uint64((1 << tail) - 1)
        elif cols == 0:
            words[:] = 0
        words.setflags(write=False)
        self._words = words
        self._cols = int(cols)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_words(cls, words: np.ndarray, cols: int) -> "BinaryMatrix":
        return cls(words, cols)

    @classmethod
    def from_dense(cls, data, cols: int | None = None) -> "BinaryMatrix":
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else np.zeros((0, cols or 0), dtype=np.int64)
        if arr.ndim != 2:
            raise ShapeMismatch("expected a 2-d array")
        if arr.shape[0] == 0 and cols is not None:
            arr = np.zeros((0, cols), dtype=np.int64)
        dense = (arr & 1).astype(np.uint8)
        return cls(_pack(dense), dense.shape[1])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(np.zeros((rows, _nwords(cols)), dtype=np.uint64), cols)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8)) if n else cls.zeros(0, 0)

    @classmethod
    def from_row_ints(cls, rows: Sequence[int], cols: int) -> "BinaryMatrix":
        nw = _nwords(cols)
        words = np.zeros((len(rows), nw), dtype=np.uint64)
        mask = (1 << 64) - 1
        for i, v in enumerate(rows):
            for k in range(nw):
                words[i, k] = (v >> (64 * k)) & mask
        return cls(words, cols)

    @classmethod
    def hstack(cls, blocks: Iterable["BinaryMatrix"]) -> "BinaryMatrix":
        blocks = list(blocks)
        if not blocks:
            return cls.zeros(0, 0)
        rows = {b.rows for b in blocks}
        if len(rows) != 1:
            raise ShapeMismatch(f"hstack row counts differ: {sorted(rows)}")
        return cls.from_dense(
            np.hstack([b.to_dense() for b in blocks]) if blocks[0].rows else
            np.zeros((0, sum(b.cols for b in blocks)), dtype=np.uint8)
        )

    @classmethod
    def vstack(cls, blocks: Iterable["BinaryMatrix"]) -> "BinaryMatrix":
        blocks = list(blocks)
        if not blocks:
            return cls.zeros(0, 0)
        cols = {b.cols for b in blocks}
        if len(cols) != 1:
            raise ShapeMismatch(f"vstack column counts differ: {sorted(cols)}")
        return cls(np.vstack([b._words for b in blocks]), blocks[0].cols)

    @classmethod
    def block(cls, grid: Sequence[Sequence["BinaryMatrix"]]) -> "BinaryMatrix":
        return cls.vstack(cls.hstack(row) for row in grid)

    # -- accessors ----------------------------------------------------------
    @property
    def rows(self) -> int:
        return self._words.shape[0]

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self._cols)

    @property
    def words(self) -> np.ndarray:
        """Read-only view of the packed storage."""
        return self._words

    def to_dense(self) -> np.ndarray:
        return _unpack(self._words, self._cols)

    def row_int(self, i: int) -> int:
        return int.from_bytes(self._words[i].astype("<u8").tobytes(), "little")

    def row_ints(self) -> list[int]:
        return [self.row_int(i) for i in range(self.rows)]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= j < self._cols):
            raise IndexError(j)
        return int(self._words[i, j >> 6] >> np.uint64(j & 63)) & 1

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self._words).sum(axis=1, dtype=np.int64)

    def col_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=0, dtype=np.int64)

    @property
    def nnz(self) -> int:
        return int(self.row_weights().sum())

    def is_zero(self) -> bool:
        return not self._words.any()

    def take_rows(self, idx: Sequence[int]) -> "BinaryMatrix":
        return BinaryMatrix(self._words[list(idx)].reshape(len(idx), -1), self._cols)

    def take_cols(self, idx: Sequence[int]) -> "BinaryMatrix":
        return BinaryMatrix.from_dense(self.to_dense()[:, list(idx)].reshape(self.rows, len(idx)))

    # -- algebra -------------------------------------------------------------
    @property
    def T(self) -> "BinaryMatrix":
        return transpose(self)

    def __matmul__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return BinaryMatrix(self._words ^ other._words, self._cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self.shape, self._words.tobytes()))

    def __repr__(self) -> str:
        if self.rows * self._cols <= 400:
            body = "; ".join("".join(map(str, r)) for r in self.to_dense())
            return f"BinaryMatrix({self.rows}x{self._cols}: {body})"
        return f"BinaryMatrix({self.rows}x{self._cols}, nnz={self.nnz})"


@dataclass(frozen=True)
class StandardForm:
    """``h_prime = row_transform @ H @ P`` with ``h_prime = [I_m | R]``.

    ``col_permutation[j]`` is the column of ``H`` that lands at position ``j``;
    the permutation matrix ``P`` has ``P[col_permutation[j], j] = 1``.
    """

    h_prime: BinaryMatrix
    row_transform: BinaryMatrix
    col_permutation: tuple[int, ...]

    def permutation_matrix(self) -> BinaryMatrix:
        n = len(self.col_permutation)
        dense = np.zeros((n, n), dtype=np.uint8)
        dense[list(self.col_permutation), np.arange(n)] = 1
        return BinaryMatrix.from_dense(dense) if n else BinaryMatrix.zeros(0, 0)

    def unpermuted(self) -> BinaryMatrix:
        """``h_prime @ P^-1``, i.e. the row-reduced checks in original column order."""
        inv = np.argsort(np.asarray(self.col_permutation, dtype=np.int64))
        return self.h_prime.take_cols(inv.tolist())


def _echelon(m: BinaryMatrix) -> tuple[np.ndarray, list[int]]:
    work = np.array(m.words, dtype=np.uint64, order="C", copy=True)
    pivots = kernels.rref(work, m.cols)
    return work, pivots


def rank(m: BinaryMatrix) -> int:
    """GF(2) row rank."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_echelon(m)[1])


def row_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Rows of the reduced row echelon form of ``m`` (a basis of its row space)."""
    work, pivots = _echelon(m)
    return BinaryMatrix(work[: len(pivots)], m.cols)


def kernel_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Basis of ``{x : m x = 0}``, one vector per row.

    One vector per free column ``f``: it has a 1 at ``f`` and at every pivot
    column whose reduced row contains ``f``.
    """
    n = m.cols
    if m.rows == 0:
        return BinaryMatrix.identity(n) if n else BinaryMatrix.zeros(0, 0)
    work, pivots = _echelon(m)
    dense = _unpack(work[: len(pivots)], n)
    free = [j for j in range(n) if j not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.uint8)
    for t, f in enumerate(free):
        out[t, f] = 1
        for r, p in enumerate(pivots):
            out[t, p] = dense[r, f]
    return BinaryMatrix.from_dense(out, cols=n)


def independent_rows(m: BinaryMatrix) -> list[int]:
    """Indices of the first maximal independent set of rows, scanning top-down."""
    chosen: list[int] = []
    basis: dict[int, int] = {}
    for i, v in enumerate(m.row_ints()):
        while v:
            low = v & -v
            if low not in basis:
                basis[low] = v
                chosen.append(i)
                break
            v ^= basis[low]
    return chosen


def standard_form(h: BinaryMatrix) -> StandardForm:
    """Row-reduce a full-row-rank ``h`` to ``[I_m | R]`` with tracked transforms."""
    m, n = h.shape
    if m == 0:
        return StandardForm(h, BinaryMatrix.zeros(0, 0), tuple(range(n)))
    aug = BinaryMatrix.hstack([h, BinaryMatrix.identity(m)])
    work = np.array(aug.words, dtype=np.uint64, order="C", copy=True)
    # pivots only among the columns of h; the identity block records G
    pivots = kernels.rref(work, n)
    if len(pivots) < m:
        raise RankDeficient(f"rank {len(pivots)} < {m} rows; drop dependent rows first")
    dense = _unpack(work, n + m)
    reduced = dense[:, :n]
    g = dense[:, n:]
    pset = set(pivots)
    perm = tuple(pivots + [j for j in range(n) if j not in pset])
    h_prime = BinaryMatrix.from_dense(reduced[:, list(perm)].reshape(m, n), cols=n)
    return StandardForm(h_prime, BinaryMatrix.from_dense(g.reshape(m, m), cols=m), perm)


def kronecker(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Kronecker product; entry ((i1, i2), (j1, j2)) = a[i1, j1] * b[i2, j2]."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    if rows == 0 or cols == 0:
        return BinaryMatrix.zeros(rows, cols)
    return BinaryMatrix.from_dense(np.kron(a.to_dense(), b.to_dense()))


def mat_mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if a.rows == 0 or b.cols == 0:
        return BinaryMatrix.zeros(a.rows, b.cols)
    if a.cols == 0:
        return BinaryMatrix.zeros(a.rows, b.cols)
    # XOR together the rows of b selected by each row of a
    sel = a.to_dense().astype(bool)
    out = np.zeros((a.rows, b.words.shape[1]), dtype=np.uint64)
    bw = b.words
    for j in range(a.cols):
        hit = sel[:, j]
        if hit.any():
            out[hit] ^= bw[j]
    return BinaryMatrix(out, b.cols)


def transpose(a: BinaryMatrix) -> BinaryMatrix:
    if a.rows == 0 or a.cols == 0:
        return BinaryMatrix.zeros(a.cols, a.rows)
    return BinaryMatrix.from_dense(a.to_dense().T)


def in_row_space(m: BinaryMatrix, v) -> bool:
    """Whether ``v`` (bit sequence or 1-row matrix) is a GF(2) combination of rows of ``m``."""
    vec = v if isinstance(v, BinaryMatrix) else BinaryMatrix.from_dense(np.asarray(v).reshape(1, -1), cols=m.cols)
    if vec.rows != 1 or vec.cols != m.cols:
        raise ShapeMismatch(f"vector of length {vec.cols} against {m.cols} columns")
    if vec.is_zero():
        return True
    return rank(BinaryMatrix.vstack([m, vec])) == rank(m)
