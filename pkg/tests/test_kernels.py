import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qltclab import kernels
from qltclab.f2 import BinaryMatrix

BACKENDS = kernels.available_backends()
compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")


def _words(rng, rows, cols):
    dense = rng.integers(0, 2, (rows, cols), dtype=np.uint8)
    return np.array(BinaryMatrix.from_dense(dense, cols=cols).words)


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_env_var_forces_fallback():
    env = dict(os.environ, QLTC_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from qltclab import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"


@compiled
@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 12), st.integers(1, 150))
def test_rref_parity(seed, rows, cols):
    rng = np.random.default_rng(seed)
    w = _words(rng, rows, cols)
    a, b = w.copy(), w.copy()
    pa = kernels.rref(a, cols, impl=BACKENDS["python"])
    pb = kernels.rref(b, cols, impl=BACKENDS["cython"])
    assert pa == pb
    assert np.array_equal(a, b)


@compiled
@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 14), st.integers(1, 90), st.integers(0, 14))
def test_span_min_weight_parity(seed, k, n, skip):
    w = _words(np.random.default_rng(seed), k, n)
    assert kernels.span_min_weight(w, skip, impl=BACKENDS["python"]) == kernels.span_min_weight(
        w, skip, impl=BACKENDS["cython"]
    )


@compiled
@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 16), st.integers(1, 6), st.integers(0, 3), st.booleans())
def test_low_weight_search_parity(seed, n, mc, mt, need_tail):
    rng = np.random.default_rng(seed)
    checks = _words(rng, n, mc)
    tails = _words(rng, n, mt) if mt else np.zeros((n, 0), dtype=np.uint64)
    need = need_tail and mt > 0
    py = kernels.low_weight_search(checks, tails, 1, 4, need, impl=BACKENDS["python"])
    cy = kernels.low_weight_search(checks, tails, 1, 4, need, impl=BACKENDS["cython"])
    assert py == cy


@compiled
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 10), st.integers(1, 20))
def test_coset_bfs_parity(seed, r, n):
    rng = np.random.default_rng(seed)
    gens = rng.integers(0, 1 << r, n).astype(np.uint64)
    a = kernels.coset_bfs(gens, r, impl=BACKENDS["python"])
    b = kernels.coset_bfs(gens, r, impl=BACKENDS["cython"])
    assert np.array_equal(a, b)


@compiled
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 12), st.integers(1, 100))
def test_span_weights_parity(seed, r, n):
    t = _words(np.random.default_rng(seed), r, n)
    a = kernels.span_weights(t, impl=BACKENDS["python"])
    b = kernels.span_weights(t, impl=BACKENDS["cython"])
    assert np.array_equal(a, b)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_span_weights_by_definition(name):
    rng = np.random.default_rng(1)
    t = rng.integers(0, 2, (5, 9), dtype=np.uint8)
    out = kernels.span_weights(BinaryMatrix.from_dense(t).words, impl=BACKENDS[name])
    for mask in range(32):
        coeff = np.array([(mask >> i) & 1 for i in range(5)], dtype=np.uint8)
        assert out[mask] == ((coeff @ t) % 2).sum()


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_coset_bfs_unreachable_marker(name):
    # generators span only the low bit; the high bit is unreachable
    out = kernels.coset_bfs(np.array([1], dtype=np.uint64), 2, impl=BACKENDS[name])
    assert out.tolist() == [0, 1, 255, 255]


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_span_min_weight_skip_beyond_rank(name):
    w = BinaryMatrix.identity(3).words
    assert kernels.span_min_weight(w, 3, impl=BACKENDS[name]) == -1
    assert kernels.span_min_weight(w, 2, impl=BACKENDS[name]) == 1


def test_benchmark_script_runs():
    script = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    out = subprocess.run([sys.executable, script, "--repeat", "1"], capture_output=True, text=True, check=True)
    assert "rref" in out.stdout and "python" in out.stdout
