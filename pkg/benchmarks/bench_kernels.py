"""Time each GF(2) kernel under the numpy fallback and the compiled backend.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0] [--end-to-end]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from qltclab import kernels
from qltclab.f2 import BinaryMatrix


def _words(rng, rows, cols):
    return np.array(BinaryMatrix.from_dense(rng.integers(0, 2, (rows, cols)), cols=cols).words)


def workloads(seed: int):
    rng = np.random.default_rng(seed)
    rref_in = _words(rng, 256, 512)
    basis = _words(rng, 18, 96)
    checks, tails = _words(rng, 48, 24), _words(rng, 48, 4)
    gens = rng.integers(0, 1 << 18, 40).astype(np.uint64)
    tcols = _words(rng, 16, 64)
    return {
        "rref 256x512": lambda impl: kernels.rref(rref_in.copy(), 512, impl=impl),
        "span_min_weight k=18": lambda impl: kernels.span_min_weight(basis, 0, impl=impl),
        "low_weight_search n=48 w<=4": lambda impl: kernels.low_weight_search(checks, tails, 1, 4, True, impl=impl),
        "coset_bfs r=18": lambda impl: kernels.coset_bfs(gens, 18, impl=impl),
        "span_weights r=16": lambda impl: kernels.span_weights(tcols, impl=impl),
    }


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["QLTC_PURE_PYTHON"] = "1"
    else:
        env.pop("QLTC_PURE_PYTHON", None)
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-m", "qltclab.cli", "verify", "all", "--json"],
                   env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - t0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--end-to-end", action="store_true", help="also time `qltclab verify all`")
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    names = sorted(backends, key=lambda n: n != "python")
    print(f"{'kernel':32s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads(args.seed).items():
        results = [fn(backends[n]) for n in names]
        for r in results[1:]:
            assert np.array_equal(np.asarray(r), np.asarray(results[0])), f"{label}: backends disagree"
        secs = [best_of(lambda: fn(backends[n]), args.repeat) for n in names]
        row = f"{label:32s}" + "".join(f"{s * 1e3:10.2f}ms" for s in secs)
        if len(secs) > 1:
            row += f"{secs[0] / secs[1]:11.1f}x"
        print(row)
    if args.end_to_end:
        py = end_to_end(pure=True)
        line = f"{'verify all (end to end)':32s}{py:11.2f}s"
        if "cython" in backends:
            cy = end_to_end(pure=False)
            line += f"{cy:11.2f}s{py / cy:11.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
