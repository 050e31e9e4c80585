"""Chain complexes over GF(2) and the distance-balanced codes built from them.

Direct sums list the ``E``-tensor block before the ``V``-tensor block, and
index ``(a, b)`` of ``F^p (x) F^q`` sits at position ``a*q + b``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import CssCode, css_new
from .errors import BadIndex, BadParameter, NotCommuting, ShapeMismatch
from .f2 import BinaryMatrix, kronecker, mat_mul, rank


class RepetitionVariant(str, enum.Enum):
    LINE = "line"
    STAR = "star"

    @classmethod
    def parse(cls, value) -> "RepetitionVariant":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise BadParameter(f"unknown repetition variant {value!r}") from None


@dataclass(frozen=True)
class ChainComplex:
    """Boundary maps ``[d_k, ..., d_1]``; ``d_i`` maps ``C_i`` to ``C_{i-1}``."""

    boundaries: tuple[BinaryMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        bs = self.boundaries
        for upper, lower in zip(bs, bs[1:]):
            if lower.cols != upper.rows:
                raise ShapeMismatch(f"boundary shapes {upper.shape} and {lower.shape} do not chain")
            if not mat_mul(lower, upper).is_zero():
                raise NotCommuting("consecutive boundaries do not compose to zero")

    @property
    def length(self) -> int:
        return len(self.boundaries)

    def boundary(self, i: int) -> BinaryMatrix:
        """``d_i`` for ``1 <= i <= length``."""
        if not 1 <= i <= self.length:
            raise BadIndex(f"no boundary d_{i} in a complex of length {self.length}")
        return self.boundaries[self.length - i]

    def dim(self, i: int) -> int:
        """``dim C_i`` for ``0 <= i <= length``."""
        if not 0 <= i <= self.length:
            raise BadIndex(f"no space C_{i}")
        if i == 0:
            return self.boundary(1).rows
        return self.boundary(i).cols

    @property
    def dims(self) -> tuple[int, ...]:
        """``(dim C_k, ..., dim C_0)``."""
        return tuple(self.dim(i) for i in range(self.length, -1, -1))

    def _rank(self, i: int) -> int:
        return rank(self.boundary(i)) if 1 <= i <= self.length else 0

    def _rank_t(self, i: int) -> int:
        return rank(self.boundary(i).T) if 1 <= i <= self.length else 0


def homology_dimension(x: ChainComplex, r: int) -> int:
    """``dim ker d_r - rank d_{r+1}``; maps past either end are zero."""
    return x.dim(r) - x._rank(r) - x._rank(r + 1)


def cohomology_dimension(x: ChainComplex, r: int) -> int:
    """``dim ker d_{r+1}^T - rank d_r^T``."""
    return x.dim(r) - x._rank_t(r + 1) - x._rank_t(r)


def repetition_matrix(ell: int, variant) -> BinaryMatrix:
    """``ell x (ell-1)`` boundary of the length-``ell`` repetition complex.

    ``LINE`` is bidiagonal (a path graph on the rows); ``STAR`` is an identity
    block over an all-ones last row (a star centred on the last row).
    """
    variant = RepetitionVariant.parse(variant)
    if ell < 2:
        raise BadParameter(f"ell must be >= 2, got {ell}")
    dense = np.zeros((ell, ell - 1), dtype=np.uint8)
    for j in range(ell - 1):
        dense[j, j] = 1
        if variant is RepetitionVariant.LINE:
            dense[j + 1, j] = 1
        else:
            dense[ell - 1, j] = 1
    return BinaryMatrix.from_dense(dense)


def repetition_complex(ell: int, variant) -> ChainComplex:
    """``E -> V`` with ``E = F^(ell-1)`` and ``V = F^ell``."""
    return ChainComplex((repetition_matrix(ell, variant),))


def _gauge_pair(h: BinaryMatrix) -> tuple[BinaryMatrix, BinaryMatrix]:
    ident = BinaryMatrix.identity(h.cols)
    return BinaryMatrix.hstack([h, h]), BinaryMatrix.hstack([ident, ident])


def gauge_fixed_duplicate(h: BinaryMatrix) -> CssCode:
    """``css([H, H], [I, I])``: the duplicated code with its weight-2 Z-logicals fixed."""
    h_x, h_z = _gauge_pair(h)
    return css_new(h_x, h_z)


def product_complex(h_x: BinaryMatrix, h_z: BinaryMatrix, r_ell: BinaryMatrix) -> ChainComplex:
    """Homological product of ``F^mz -h_z^T-> F^N -h_x-> F^mx`` with ``E -r_ell-> V``."""
    m, n_q = h_x.shape
    n_z = h_z.rows
    ell_e, ell_v = r_ell.cols, r_ell.rows
    i_e, i_v = BinaryMatrix.identity(ell_e), BinaryMatrix.identity(ell_v)
    hzt = h_z.T
    d3 = BinaryMatrix.vstack([kronecker(hzt, i_e), kronecker(BinaryMatrix.identity(n_z), r_ell)])
    d2 = BinaryMatrix.block(
        [
            [kronecker(h_x, i_e), BinaryMatrix.zeros(m * ell_e, n_z * ell_v)],
            [kronecker(BinaryMatrix.identity(n_q), r_ell), kronecker(hzt, i_v)],
        ]
    )
    d1 = BinaryMatrix.hstack([kronecker(BinaryMatrix.identity(m), r_ell), kronecker(h_x, i_v)])
    return ChainComplex((d3, d2, d1))


def balanced_complex(h: BinaryMatrix, ell: int, variant) -> ChainComplex:
    h_x, h_z = _gauge_pair(h)
    return product_complex(h_x, h_z, repetition_matrix(ell, variant))


def complex_css(x: ChainComplex) -> CssCode:
    """Quantum code of ``C_2 -> C_1 -> C_0``: qubits on ``C_1``."""
    return css_new(x.boundary(1), x.boundary(2).T)


def distance_balanced_css(h: BinaryMatrix, ell: int, variant) -> CssCode:
    return complex_css(balanced_complex(h, ell, variant))


@dataclass(frozen=True)
class BalancedLayout:
    """Block offsets of the balanced complex, for reading off structural classes."""

    n: int
    m: int
    ell: int

    @property
    def n_qubits(self) -> int:
        return 2 * self.n * self.ell + self.m * (self.ell - 1)

    def hub_x_generators(self) -> list[int]:
        """Rows of ``h_x`` indexed ``c_i (x) v_ell``."""
        return [i * self.ell + self.ell - 1 for i in range(self.m)]

    def hub_qubits(self) -> list[int]:
        """Qubits ``q_i (x) v_ell`` of the ``F^2n (x) V`` block."""
        off = self.m * (self.ell - 1)
        return [off + q * self.ell + self.ell - 1 for q in range(2 * self.n)]

    def e_block(self) -> range:
        return range(self.m * (self.ell - 1))


def balanced_layout(h: BinaryMatrix, ell: int) -> BalancedLayout:
    return BalancedLayout(h.cols, h.rows, ell)


def chain_dims(h: BinaryMatrix, ell: int) -> Sequence[int]:
    """``(dim C_3, dim C_2, dim C_1, dim C_0)`` of the balanced complex, by formula."""
    n, m = h.cols, h.rows
    return (n * (ell - 1), 2 * n * (ell - 1) + n * ell, m * (ell - 1) + 2 * n * ell, m * ell)
