import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qltclab.codes import (
    INFINITE,
    ClassicalCode,
    SoundnessMethod,
    classical_dimension,
    classical_distance,
    classical_soundness_exact,
    classical_soundness_sampled,
    coset_leader_table,
    css_dimension,
    css_distances,
    css_new,
    min_weight,
    quantum_soundness_interval,
)
from qltclab.config import get_cap, set_cap
from qltclab.corpus import hamming7_checks, repetition_checks
from qltclab.errors import NotCommuting, ShapeMismatch, TooLarge, TrivialCode
from qltclab.f2 import BinaryMatrix
from qltclab.homology import gauge_fixed_duplicate
from qltclab.constructions import duplicate_css, random_nested_css

REP3 = repetition_checks(3)
HAM = hamming7_checks()


def _code(a):
    return ClassicalCode(BinaryMatrix.from_dense(a, cols=a.shape[1]))


def random_code(seed, n_max=10):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, n_max + 1))
    m = int(rng.integers(1, n + 1))
    return oracles.random_dense(rng, m, n)


# -- dimension and distance ------------------------------------------------


def test_dimension_examples():
    assert classical_dimension(ClassicalCode(REP3)) == 1
    assert classical_dimension(ClassicalCode(HAM)) == 4
    dup_row = BinaryMatrix.vstack([REP3, REP3.take_rows([0])])
    assert classical_dimension(ClassicalCode(dup_row)) == 1


def test_distance_examples():
    assert classical_distance(ClassicalCode(REP3)) == 3
    assert classical_distance(ClassicalCode(HAM)) == 3
    assert classical_distance(ClassicalCode(BinaryMatrix.identity(3))) == INFINITE


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_distance_matches_enumeration(seed):
    a = random_code(seed, 12)
    assert classical_distance(_code(a)) == oracles.distance(a)


def test_min_weight_paths_agree():
    # a cap below 2^k forces the combination search; a large one allows enumeration
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = oracles.random_dense(rng, 4, 16)
        h = BinaryMatrix.from_dense(a)
        want = oracles.distance(a)
        assert min_weight(h) == want
        assert min_weight(h, cap=1 << 30) == want


def test_distance_too_large():
    h = BinaryMatrix.from_dense(np.ones((1, 40), dtype=np.uint8))
    # distance 2 is still found by the low-weight search within the cap
    assert classical_distance(ClassicalCode(h), cap=1 << 12) == 2
    wide = BinaryMatrix.zeros(1, 40)
    with pytest.raises(TooLarge):
        classical_distance(ClassicalCode(BinaryMatrix.vstack([wide, h])), cap=1)


# -- coset tables and soundness -----------------------------------------------


def test_coset_table_examples():
    assert coset_leader_table(ClassicalCode(REP3)).as_dict() == {
        (0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 1,
    }
    assert coset_leader_table(ClassicalCode(BinaryMatrix.identity(2))).as_dict() == {
        (0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 2,
    }
    redundant = BinaryMatrix.vstack([REP3, BinaryMatrix.from_dense([[1, 0, 1]])])
    table = coset_leader_table(ClassicalCode(redundant))
    assert len(table) == 4
    with pytest.raises(KeyError):
        table.leader_weight([1, 0, 0])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_coset_table_matches_enumeration(seed):
    a = random_code(seed, 10)
    assert coset_leader_table(_code(a)).as_dict() == oracles.leader_weights(a)


def test_coset_table_cap():
    with pytest.raises(TooLarge):
        coset_leader_table(ClassicalCode(HAM), cap=4)


def test_soundness_examples():
    iv = classical_soundness_exact(ClassicalCode(REP3))
    assert iv.lower == iv.upper == Fraction(3, 2)
    assert iv.method is SoundnessMethod.EXACT
    dup = ClassicalCode(BinaryMatrix.hstack([REP3, REP3]))
    assert classical_soundness_exact(dup).value == 3


def test_soundness_trivial_code():
    with pytest.raises(TrivialCode):
        classical_soundness_exact(ClassicalCode(BinaryMatrix.zeros(2, 3)))
    with pytest.raises(TrivialCode):
        classical_soundness_sampled(ClassicalCode(BinaryMatrix.zeros(2, 3)), 5, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_soundness_matches_enumeration(seed):
    a = random_code(seed, 9)
    if not a.any():
        return
    assert classical_soundness_exact(_code(a)).value == oracles.soundness(a)


def test_sampled_soundness():
    code = ClassicalCode(REP3)
    iv = classical_soundness_sampled(code, 1000, seed=1)
    assert iv.lower == 0 and iv.upper <= Fraction(3, 2)
    assert iv.method is SoundnessMethod.SAMPLED
    assert classical_soundness_sampled(code, 50, seed=9) == classical_soundness_sampled(code, 50, seed=9)


def test_sampled_soundness_single_trial():
    code = ClassicalCode(HAM)
    iv = classical_soundness_sampled(code, 1, seed=4)
    exact = classical_soundness_exact(code).value
    assert iv.upper >= exact
    # a single sample gives |Hx| n / (m d(x, C)) for that x, so numerator is a multiple of n/m
    assert (iv.upper * 3 / 7).denominator <= 7


def test_sampled_soundness_without_table(monkeypatch):
    # the per-sample search must reproduce the table lookups draw for draw
    rng = np.random.default_rng(2)
    code = _code(oracles.random_dense(rng, 5, 10))
    with_table = classical_soundness_sampled(code, 40, seed=3)

    def no_table(*args, **kwargs):
        raise TooLarge("forced")

    monkeypatch.setattr("qltclab.codes.coset_leader_table", no_table)
    assert classical_soundness_sampled(code, 40, seed=3) == with_table
    assert with_table.upper >= oracles.soundness(code.h)


# -- CSS codes ------------------------------------------------------------------


def test_css_validation():
    hh = BinaryMatrix.hstack([REP3, REP3])
    ii = BinaryMatrix.hstack([BinaryMatrix.identity(3)] * 2)
    css_new(hh, hh)
    css_new(hh, ii)
    with pytest.raises(NotCommuting):
        css_new(BinaryMatrix.identity(2), BinaryMatrix.identity(2))
    with pytest.raises(ShapeMismatch):
        css_new(REP3, BinaryMatrix.identity(4))


def test_css_dimension_examples():
    assert css_dimension(duplicate_css(REP3)) == 2
    assert css_dimension(gauge_fixed_duplicate(REP3)) == 1
    assert css_dimension(random_nested_css(8, 0)) == 4


def test_css_distance_examples():
    assert css_distances(duplicate_css(REP3)) == (2, 2)
    assert css_distances(gauge_fixed_duplicate(REP3)) == (2, 3)
    q = css_new(BinaryMatrix.identity(3), BinaryMatrix.zeros(0, 3))
    assert q.k == 0
    assert css_distances(q) == (INFINITE, INFINITE)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_css_distances_match_enumeration(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 11))
    hx = oracles.random_dense(rng, int(rng.integers(1, n)), n)
    ker = oracles.kernel(hx)
    pick = rng.integers(0, 2, len(ker)).astype(bool)
    hz = ker[pick][:4] if pick.any() else np.zeros((0, n), dtype=np.uint8)
    q = css_new(BinaryMatrix.from_dense(hx), BinaryMatrix.from_dense(hz, cols=n))
    assert css_distances(q) == oracles.css_distances(hx, hz)


def test_quantum_interval_examples():
    iv = quantum_soundness_interval(duplicate_css(REP3))
    assert (iv.lower, iv.upper) == (3, 6)
    g = gauge_fixed_duplicate(REP3)
    rx = oracles.soundness(g.h_x)
    rz = oracles.soundness(g.h_z)
    assert quantum_soundness_interval(g).lower == min(rx, rz)


def test_quantum_interval_trivial_side():
    q = css_new(REP3, BinaryMatrix.zeros(1, 3))
    with pytest.raises(TrivialCode):
        quantum_soundness_interval(q)


# -- cap configuration ---------------------------------------------------------


def test_cap_resolution(monkeypatch):
    monkeypatch.setenv("QLTC_CAP", "1024")
    assert get_cap() == 1024
    set_cap(77)
    try:
        assert get_cap() == 77
        assert get_cap(5) == 5
    finally:
        set_cap(None)
    monkeypatch.delenv("QLTC_CAP")
    assert get_cap() == 1 << 24


def test_infinite_is_math_inf():
    assert INFINITE == math.inf
