"""Built-in named codes and the standard verification corpus.

Classical names: ``rep3``, ``rep5`` (any ``repN``), ``hamming7``, ``ones4``
(a single all-ones check, any ``onesN``) and ``random:n=K:seed=S``.
Quantum names: ``dup:<classical>``, ``gauge:<classical>``, ``css:<classical>``
(the same matrix on both sides) and ``nested:n=K:seed=S``.
"""

from __future__ import annotations

import re

import numpy as np

from .codes import CssCode, css_new
from .errors import BadParameter
from .f2 import BinaryMatrix, rank

_MAX_RETRIES = 64


def repetition_checks(n: int) -> BinaryMatrix:
    """``(n-1) x n`` checks ``x_i + x_{i+1} = 0``."""
    if n < 2:
        raise BadParameter("repetition code needs n >= 2")
    dense = np.zeros((n - 1, n), dtype=np.uint8)
    for i in range(n - 1):
        dense[i, i] = dense[i, i + 1] = 1
    return BinaryMatrix.from_dense(dense)


def hamming7_checks() -> BinaryMatrix:
    """Column ``j`` is the binary expansion of ``j + 1``."""
    dense = [[(j + 1) >> i & 1 for j in range(7)] for i in range(3)]
    return BinaryMatrix.from_dense(dense)


def random_checks(n: int, seed: int) -> BinaryMatrix:
    """``floor(n/2) x n`` uniform checks without zero rows or zero columns."""
    if n < 2:
        raise BadParameter("random code needs n >= 2")
    rng = np.random.default_rng(seed)
    m = n // 2
    for _ in range(_MAX_RETRIES):
        dense = rng.integers(0, 2, (m, n))
        if dense.any(axis=1).all() and dense.any(axis=0).all():
            h = BinaryMatrix.from_dense(dense)
            if rank(h) >= 1:
                return h
    raise BadParameter(f"could not sample random:n={n}:seed={seed}")


def _kv(spec: str) -> dict[str, int]:
    out = {}
    for part in spec.split(":")[1:]:
        key, _, val = part.partition("=")
        if not val:
            raise BadParameter(f"malformed parameter {part!r} in {spec!r}")
        out[key] = int(val)
    return out


def classical_checks(name: str) -> BinaryMatrix:
    name = name.strip().lower()
    if m := re.fullmatch(r"rep(\d+)", name):
        return repetition_checks(int(m.group(1)))
    if name in ("hamming7", "ham7"):
        return hamming7_checks()
    if m := re.fullmatch(r"ones(\d+)", name):
        return BinaryMatrix.from_dense(np.ones((1, int(m.group(1))), dtype=np.uint8))
    if name.startswith("random:"):
        kv = _kv(name)
        return random_checks(kv["n"], kv.get("seed", 0))
    raise BadParameter(f"unknown classical code {name!r}")


def quantum_code(name: str) -> CssCode:
    from .constructions import duplicate_css, random_nested_css
    from .homology import gauge_fixed_duplicate

    name = name.strip().lower()
    kind, _, rest = name.partition(":")
    if kind == "dup":
        return duplicate_css(classical_checks(rest))
    if kind == "gauge":
        return gauge_fixed_duplicate(classical_checks(rest))
    if kind == "css":
        h = classical_checks(rest)
        return css_new(h, h)
    if kind == "nested":
        kv = _kv(name)
        return random_nested_css(kv["n"], kv.get("seed", 0))
    raise BadParameter(f"unknown quantum code {name!r}")


RANDOM_LENGTHS = (6, 6, 7, 7, 8, 8, 9, 9, 10, 10)


def standard_corpus(seed: int = 0) -> list[str]:
    """rep3, rep5, hamming7 and ten seeded random codes with n <= 10."""
    names = ["rep3", "rep5", "hamming7"]
    names += [f"random:n={n}:seed={seed + i}" for i, n in enumerate(RANDOM_LENGTHS)]
    return names
