"""Code-building procedures: duplication, check products, standard-form
transforms and random nested CSS codes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codes import (
    ClassicalCode,
    CssCode,
    classical_distance,
    classical_soundness_exact,
    css_new,
)
from .errors import BadParameter
from .f2 import (
    BinaryMatrix,
    independent_rows,
    kernel_basis,
    kronecker,
    rank,
    standard_form,
)

_MAX_RETRIES = 64


def duplicate_checks(h: BinaryMatrix) -> ClassicalCode:
    """``ker [H | H]``: pairs ``(x, y)`` with ``x + y`` in ``ker H``."""
    return ClassicalCode(BinaryMatrix.hstack([h, h]))


def duplicate_css(h: BinaryMatrix) -> CssCode:
    hh = BinaryMatrix.hstack([h, h])
    return css_new(hh, hh)


def check_product_classical(h1: BinaryMatrix, h2: BinaryMatrix) -> ClassicalCode:
    return ClassicalCode(kronecker(h1, h2))


def check_product_quantum(q: CssCode, h: BinaryMatrix) -> CssCode:
    return css_new(kronecker(q.h_x, h), kronecker(q.h_z, h))


def standard_checks(h: BinaryMatrix) -> BinaryMatrix:
    """Independent rows of ``h`` row-reduced so the pivot columns carry an identity.

    Dependent rows are dropped first, keeping the earliest independent set.
    The result has the same kernel as ``h``; permuting its pivot columns to
    the front gives ``[I_m | R]``.
    """
    keep = independent_rows(h)
    sf = standard_form(h.take_rows(keep))
    return sf.unpermuted()


def standardize_classical(code: ClassicalCode) -> ClassicalCode:
    return ClassicalCode(standard_checks(code.h))


def standardize_css(q: CssCode) -> CssCode:
    return css_new(standard_checks(q.h_x), standard_checks(q.h_z))


@dataclass(frozen=True)
class CheckProductLTC:
    """A standardized check product together with the parameters it is promised."""

    code: CssCode
    base_soundness: Fraction
    claimed_soundness: Fraction
    claimed_distance: float
    claimed_dimension: int
    claimed_locality: int


def cp_standard_ltc(
    q: CssCode,
    c: ClassicalCode,
    rho: Fraction | None = None,
    cap: int | None = None,
) -> CheckProductLTC:
    """Standardize ``q`` and take its check product with ``c``.

    ``rho`` is the soundness of ``c``; it is computed exhaustively if omitted.
    """
    qbar = standardize_css(q)
    if rho is None:
        rho = classical_soundness_exact(c, cap).value
    n_q = q.n
    soundness = rho * min(Fraction(n_q, qbar.m_x), Fraction(n_q, qbar.m_z))
    distance = min(
        classical_distance(c, cap),
        classical_distance(ClassicalCode(q.h_x), cap),
        classical_distance(ClassicalCode(q.h_z), cap),
    )
    dimension = c.n * n_q - (c.n - c.k) * (n_q - q.k)
    w = int(max(c.h.row_weights().max(initial=0), c.h.col_weights().max(initial=0)))
    return CheckProductLTC(
        code=check_product_quantum(qbar, c.h),
        base_soundness=rho,
        claimed_soundness=soundness,
        claimed_distance=distance,
        claimed_dimension=dimension,
        claimed_locality=w * n_q,
    )


def _full_rank_sample(rng: np.random.Generator, rows: int, cols: int, top=None) -> BinaryMatrix:
    for _ in range(_MAX_RETRIES):
        block = BinaryMatrix.from_dense(rng.integers(0, 2, (rows, cols)), cols=cols)
        stacked = block if top is None else BinaryMatrix.vstack([top, block])
        if rank(stacked) == stacked.rows:
            return stacked
    raise BadParameter(f"no full-rank sample after {_MAX_RETRIES} draws")


def random_nested_css(n: int, seed: int) -> CssCode:
    """CSS code from a random ``C`` of dimension 3n/4 and a random ``D <= C`` of dimension n/4.

    ``h_x`` is the ``n/4 x n`` check matrix of ``C``; ``h_z`` is a basis of
    ``D``, so that ``ker(h_z) = D^perp``.  ``D`` is the kernel of ``h_x``
    stacked on ``n/2`` further random rows.
    """
    if n <= 0 or n % 4:
        raise BadParameter(f"n must be a positive multiple of 4, got {n}")
    rng = np.random.default_rng(seed)
    h_c = _full_rank_sample(rng, n // 4, n)
    w = _full_rank_sample(rng, n // 2, n, top=h_c)
    return css_new(h_c, kernel_basis(w))
