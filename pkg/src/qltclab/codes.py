"""Classical and CSS codes with exact parameter oracles.

Soundness follows the normalisation ``|Hx|/m >= (rho/n) d(x, C)``.  For a
fixed syndrome ``s`` the left side is constant and ``d(x, C)`` is the weight
of the coset leader of ``s``, so the exhaustive search runs over the
``2^rank(H)`` syndromes in the image of ``H`` instead of all ``2^n`` words.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .config import get_cap
from .errors import NotCommuting, ShapeMismatch, TooLarge, TrivialCode
from .f2 import BinaryMatrix, kernel_basis, mat_mul, rank

INFINITE = math.inf

# below this many codewords, enumerate straight away
_SMALL_SPACE = 1 << 12


class SoundnessMethod(str, enum.Enum):
    EXACT = "exact-exhaustive"
    SAMPLED = "sampled"
    CSS = "css-reduction"


@dataclass(frozen=True)
class SoundnessInterval:
    lower: Fraction
    upper: Fraction
    method: SoundnessMethod

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")
        if self.method is SoundnessMethod.EXACT and self.lower != self.upper:
            raise ValueError("an exhaustive soundness value is a point")

    @property
    def value(self) -> Fraction:
        """The point value of an exhaustive interval."""
        if self.lower != self.upper:
            raise ValueError("interval is not a point")
        return self.lower


@dataclass(frozen=True)
class ClassicalCode:
    """``ker(h)`` together with its check set ``h`` (redundant rows allowed)."""

    h: BinaryMatrix

    @property
    def n(self) -> int:
        return self.h.cols

    @property
    def m(self) -> int:
        return self.h.rows

    @cached_property
    def rank(self) -> int:
        return rank(self.h)

    @property
    def k(self) -> int:
        return self.n - self.rank

    def contains(self, word: Sequence[int]) -> bool:
        x = BinaryMatrix.from_dense(np.asarray(word).reshape(1, -1), cols=self.n)
        return mat_mul(self.h, x.T).is_zero()


@dataclass(frozen=True)
class CssCode:
    """CSS code with X-checks ``h_x`` and Z-checks ``h_z``."""

    h_x: BinaryMatrix
    h_z: BinaryMatrix

    def __post_init__(self):
        if self.h_x.cols != self.h_z.cols:
            raise ShapeMismatch(f"h_x has {self.h_x.cols} columns, h_z has {self.h_z.cols}")
        if not mat_mul(self.h_x, self.h_z.T).is_zero():
            raise NotCommuting("h_x @ h_z.T != 0")

    @property
    def n(self) -> int:
        return self.h_x.cols

    @property
    def m_x(self) -> int:
        return self.h_x.rows

    @property
    def m_z(self) -> int:
        return self.h_z.rows

    @cached_property
    def k(self) -> int:
        return self.n - rank(self.h_x) - rank(self.h_z)

    @property
    def x_code(self) -> ClassicalCode:
        """``C_X = ker(h_x)`` checked by ``h_x``."""
        return ClassicalCode(self.h_x)

    @property
    def z_code(self) -> ClassicalCode:
        return ClassicalCode(self.h_z)


# ---------------------------------------------------------------------------
# minimum-weight search


def _extend_basis(first: BinaryMatrix, pool: BinaryMatrix) -> BinaryMatrix:
    """Rows of ``first`` followed by the rows of ``pool`` that enlarge the span."""
    echelon: dict[int, int] = {}
    kept = []

    def insert(v: int) -> bool:
        while v:
            low = v & -v
            if low not in echelon:
                echelon[low] = v
                return True
            v ^= echelon[low]
        return False

    for v in first.row_ints():
        insert(v)
    for v in pool.row_ints():
        if insert(v):
            kept.append(v)
    return BinaryMatrix.vstack([first, BinaryMatrix.from_row_ints(kept, pool.cols)])


def min_weight(checks: BinaryMatrix, tests: BinaryMatrix | None = None, cap: int | None = None):
    """Minimum weight of ``x`` with ``checks x = 0`` and, if given, ``tests x != 0``.

    Low weights are tried first by combination search; the search falls back
    to enumerating ``ker(checks)`` once that becomes cheaper.  Returns
    :data:`INFINITE` when no such ``x`` exists.
    """
    cap = get_cap(cap)
    n = checks.cols
    dim = n - rank(checks)
    if tests is None:
        tests = BinaryMatrix.zeros(0, n)
        skip = 0
    else:
        skip = n - rank(BinaryMatrix.vstack([checks, tests]))
    if dim == skip:
        return INFINITE
    enum_cost = 1 << dim if dim < 63 else math.inf

    if enum_cost > _SMALL_SPACE:
        budget = min(enum_cost, cap)
        cols_c = checks.T.words
        cols_t = tests.T.words if tests.rows else np.zeros((n, 0), dtype=np.uint64)
        spent = 0
        for w in range(1, n + 1):
            step = math.comb(n, w)
            if spent + step > budget:
                break
            spent += step
            if kernels.low_weight_search(cols_c, cols_t, w, w, tests.rows > 0) == w:
                return w
        if enum_cost > cap:
            raise TooLarge(
                f"kernel dimension {dim} exceeds the enumeration cap and no word of weight "
                f"<= {w - 1} was found"
            )
    stable = kernel_basis(BinaryMatrix.vstack([checks, tests])) if skip else BinaryMatrix.zeros(0, n)
    basis = _extend_basis(stable, kernel_basis(checks))
    return kernels.span_min_weight(basis.words, skip)


# ---------------------------------------------------------------------------
# classical oracles


def classical_dimension(code: ClassicalCode) -> int:
    return code.k


def classical_distance(code: ClassicalCode, cap: int | None = None):
    """Minimum nonzero codeword weight, or :data:`INFINITE` when ``k = 0``."""
    return min_weight(code.h, None, cap)


@dataclass(frozen=True)
class CosetLeaderTable:
    """Coset-leader weights for every syndrome in ``im(h)``.

    Syndromes are addressed through the first maximal independent set of
    rows (``pivot_rows``): the restriction ``s_P`` determines ``s``, and
    ``leader[s_P]`` is the minimum weight of ``x`` with ``h_P x = s_P``.
    ``row_coeffs[i]`` expresses row ``i`` of ``h`` over the pivot rows.
    """

    h: BinaryMatrix
    pivot_rows: tuple[int, ...]
    row_coeffs: tuple[int, ...]
    leader: np.ndarray
    syndrome_weight: np.ndarray

    def __len__(self) -> int:
        return len(self.leader)

    def _to_index(self, syndrome) -> int:
        bits = [int(b) & 1 for b in syndrome]
        if len(bits) != self.h.rows:
            raise ShapeMismatch(f"syndrome length {len(bits)} != {self.h.rows}")
        idx = 0
        for p, row in enumerate(self.pivot_rows):
            idx |= bits[row] << p
        for i, coeff in enumerate(self.row_coeffs):
            if bin(coeff & idx).count("1") & 1 != bits[i]:
                raise KeyError("syndrome is not in the image of h")
        return idx

    def _from_index(self, idx: int) -> tuple[int, ...]:
        return tuple(bin(c & idx).count("1") & 1 for c in self.row_coeffs)

    def leader_weight(self, syndrome) -> int:
        return int(self.leader[self._to_index(syndrome)])

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {self._from_index(i): int(w) for i, w in enumerate(self.leader)}


def _row_structure(h: BinaryMatrix) -> tuple[list[int], list[int]]:
    """Pivot rows (first independent set, top-down) and each row's coefficients."""
    echelon: dict[int, tuple[int, int]] = {}
    pivots: list[int] = []
    coeffs: list[int] = []
    for i, v in enumerate(h.row_ints()):
        cmb = 0
        while v:
            low = v & -v
            if low not in echelon:
                break
            ev, ec = echelon[low]
            v ^= ev
            cmb ^= ec
        if v:
            p = len(pivots)
            pivots.append(i)
            echelon[v & -v] = (v, cmb ^ (1 << p))
            coeffs.append(1 << p)
        else:
            coeffs.append(cmb)
    return pivots, coeffs


def coset_leader_table(code: ClassicalCode, cap: int | None = None) -> CosetLeaderTable:
    cap = get_cap(cap)
    h = code.h
    pivots, coeffs = _row_structure(h)
    r = len(pivots)
    if r > 62 or (1 << r) > cap:
        raise TooLarge(f"coset table needs 2^{r} entries")
    dense = h.to_dense()
    gens = np.zeros(h.cols, dtype=np.uint64)
    for p, row in enumerate(pivots):
        gens |= dense[row].astype(np.uint64) << np.uint64(p)
    leader = kernels.coset_bfs(gens, r)
    # full syndrome of the unit vector e_p in pivot coordinates
    tcols = BinaryMatrix.from_row_ints(
        [sum(1 << i for i, c in enumerate(coeffs) if c >> p & 1) for p in range(r)], h.rows
    )
    weights = kernels.span_weights(tcols.words)
    leader.setflags(write=False)
    weights.setflags(write=False)
    return CosetLeaderTable(h, tuple(pivots), tuple(coeffs), leader, weights)


def _ratio_floor(table: CosetLeaderTable) -> Fraction:
    """``min |s| / leader(s)`` over nonzero syndromes in the image."""
    lead = table.leader[1:].astype(np.int64)
    sw = table.syndrome_weight[1:].astype(np.int64)
    best = None
    for d in np.unique(lead):
        cand = Fraction(int(sw[lead == d].min()), int(d))
        if best is None or cand < best:
            best = cand
    return best


def classical_soundness_exact(code: ClassicalCode, cap: int | None = None) -> SoundnessInterval:
    """Largest ``rho`` with ``|Hx|/m >= (rho/n) d(x, C)`` for every word ``x``."""
    table = coset_leader_table(code, cap)
    if len(table) == 1:
        raise TrivialCode("im(H) = {0}; soundness is undefined")
    rho = Fraction(code.n, code.m) * _ratio_floor(table)
    return SoundnessInterval(rho, rho, SoundnessMethod.EXACT)


def _distance_to_code(code: ClassicalCode, syndrome_cols: np.ndarray, syn: int, cap: int) -> int:
    # d(x, C) = min |e| with He = Hx; search ker [H | s] for words using the last column
    n = code.n
    s_row = BinaryMatrix.from_row_ints([syn], code.m).words
    checks = np.vstack([syndrome_cols, s_row])
    tails = np.zeros((n + 1, 1), dtype=np.uint64)
    tails[n, 0] = 1
    spent = 0
    for w in range(2, n + 2):
        spent += math.comb(n + 1, w)
        if spent > cap:
            raise TooLarge("per-sample distance search exceeded the cap")
        if kernels.low_weight_search(checks, tails, w, w, True) == w:
            return w - 1
    raise AssertionError("unreachable: the syndrome lies in im(H)")


def classical_soundness_sampled(
    code: ClassicalCode, trials: int, seed: int, cap: int | None = None
) -> SoundnessInterval:
    """Upper bound on soundness from ``trials`` random words off the code.

    Words with zero syndrome are redrawn.  The lower end is always 0.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cap = get_cap(cap)
    n, m = code.n, code.m
    if code.rank == 0:
        raise TrivialCode("im(H) = {0}; soundness is undefined")
    rng = np.random.default_rng(seed)
    cols = code.h.T.row_ints()
    try:
        table = coset_leader_table(code, cap)
    except TooLarge:
        table = None
    col_words = code.h.T.words
    best = None
    for _ in range(trials):
        while True:
            x = rng.integers(0, 2, n)
            syn = 0
            for j in np.flatnonzero(x):
                syn ^= cols[j]
            if syn:
                break
        bits = [(syn >> i) & 1 for i in range(m)]
        if table is not None:
            dist = table.leader_weight(bits)
        else:
            dist = _distance_to_code(code, col_words, syn, cap)
        ratio = Fraction(n * sum(bits), m * dist)
        if best is None or ratio < best:
            best = ratio
    return SoundnessInterval(Fraction(0), best, SoundnessMethod.SAMPLED)


# ---------------------------------------------------------------------------
# CSS oracles


def css_new(h_x: BinaryMatrix, h_z: BinaryMatrix) -> CssCode:
    return CssCode(h_x, h_z)


def css_dimension(q: CssCode) -> int:
    return q.k


def css_distances(q: CssCode, cap: int | None = None):
    """``(d_x, d_z)``: minimum weights of X-type and Z-type logical operators.

    ``d_x`` ranges over ``ker(h_z) \\ rowspace(h_x)``, ``d_z`` over
    ``ker(h_x) \\ rowspace(h_z)``.  A vector of ``ker(h_z)`` lies outside
    ``rowspace(h_x)`` exactly when it pairs nontrivially with ``ker(h_x)``.
    """
    d_x = min_weight(q.h_z, kernel_basis(q.h_x), cap)
    d_z = min_weight(q.h_x, kernel_basis(q.h_z), cap)
    return d_x, d_z


def css_distance(q: CssCode, cap: int | None = None):
    return min(css_distances(q, cap))


def quantum_soundness_interval(q: CssCode, cap: int | None = None) -> SoundnessInterval:
    """``[rho_min, 2 rho_min]`` with ``rho_min`` the weaker classical side."""
    rho_x = classical_soundness_exact(q.x_code, cap).value
    rho_z = classical_soundness_exact(q.z_code, cap).value
    lo = min(rho_x, rho_z)
    return SoundnessInterval(lo, 2 * lo, SoundnessMethod.CSS)
