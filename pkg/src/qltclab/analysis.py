"""Locality profiles, statement verification and parameter sweeps.

Each statement compares a *predicted* quantity, computed from the closed-form
parameters of the construction, with a *measured* one obtained from the
exhaustive oracles in :mod:`qltclab.codes` run on the constructed matrices.
Asymptotic statements are checked as exact finite facts per instance.
"""

from __future__ import annotations

import csv
import enum
import functools
import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from . import corpus
from .codes import (
    ClassicalCode,
    CssCode,
    classical_distance,
    classical_soundness_exact,
    css_distances,
    quantum_soundness_interval,
)
from .constructions import (
    check_product_classical,
    check_product_quantum,
    cp_standard_ltc,
    duplicate_checks,
    duplicate_css,
    random_nested_css,
    standard_checks,
    standardize_classical,
    standardize_css,
)
from .errors import BadParameter, QltcError
from .f2 import BinaryMatrix, kernel_basis, kronecker, mat_mul, rank
from .homology import (
    RepetitionVariant,
    balanced_complex,
    balanced_layout,
    complex_css,
    gauge_fixed_duplicate,
    homology_dimension,
)

# ---------------------------------------------------------------------------
# locality


@dataclass(frozen=True)
class LocalityProfile:
    max_row_weight: int
    max_col_weight: int
    avg_row_weight: Fraction
    avg_col_weight: Fraction
    row_weight_histogram: dict[int, int]
    col_weight_histogram: dict[int, int]
    total_weight: int

    def to_dict(self) -> dict:
        return {
            "type": "locality",
            "max_row_weight": self.max_row_weight,
            "max_col_weight": self.max_col_weight,
            "avg_row_weight": render(self.avg_row_weight),
            "avg_col_weight": render(self.avg_col_weight),
            "row_weight_histogram": {str(k): v for k, v in self.row_weight_histogram.items()},
            "col_weight_histogram": {str(k): v for k, v in self.col_weight_histogram.items()},
            "total_weight": self.total_weight,
        }


def locality_profile(m: BinaryMatrix) -> LocalityProfile:
    rw = [int(w) for w in m.row_weights()]
    cw = [int(w) for w in m.col_weights()]
    total = sum(rw)
    return LocalityProfile(
        max_row_weight=max(rw, default=0),
        max_col_weight=max(cw, default=0),
        avg_row_weight=Fraction(total, len(rw)) if rw else Fraction(0),
        avg_col_weight=Fraction(total, len(cw)) if cw else Fraction(0),
        row_weight_histogram=dict(sorted(Counter(rw).items())),
        col_weight_histogram=dict(sorted(Counter(cw).items())),
        total_weight=total,
    )


# ---------------------------------------------------------------------------
# reports


class Method(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANK = "rank"
    ENUMERATION = "enumeration"
    SAMPLED = "sampled"


def render(value: Any) -> Any:
    """JSON-safe rendering: rationals as ``"p/q"``, infinity as ``"inf"``."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return render(Fraction(value))
    if isinstance(value, int):
        return int(value)
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return value


@dataclass(frozen=True)
class VerificationReport:
    statement: str
    instance: str
    predicted: Any
    measured: Any
    passed: bool | None
    method: Method
    relation: Any = field(default="eq", compare=False)

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "instance": self.instance,
            "predicted": render(self.predicted),
            "measured": render(self.measured),
            "pass": self.passed,
            "method": self.method.value,
        }


_RELATIONS: dict[str, Callable[[Any, Any], bool]] = {
    "eq": lambda measured, predicted: measured == predicted,
    "ge": lambda measured, predicted: measured >= predicted,
    "le": lambda measured, predicted: measured <= predicted,
}


def _holds(measured, predicted, relation) -> bool:
    if isinstance(relation, dict):
        return all(_holds(measured[k], predicted[k], relation.get(k, "eq")) for k in predicted)
    return _RELATIONS[relation](measured, predicted)


def _report(statement, instance, predicted, measured, method, relation="eq"):
    return VerificationReport(
        statement, instance, predicted, measured, _holds(measured, predicted, relation), method, relation
    )


# ---------------------------------------------------------------------------
# cached oracles on named codes (names are the cache keys)


@functools.lru_cache(maxsize=None)
def _checks(name: str) -> BinaryMatrix:
    return corpus.classical_checks(name)


@functools.lru_cache(maxsize=None)
def _quantum(name: str) -> CssCode:
    return corpus.quantum_code(name)


@functools.lru_cache(maxsize=None)
def _distance(name: str):
    return classical_distance(ClassicalCode(_checks(name)))


@functools.lru_cache(maxsize=None)
def _soundness(name: str) -> Fraction:
    return classical_soundness_exact(ClassicalCode(_checks(name))).value


def _k(name: str) -> int:
    h = _checks(name)
    return h.cols - rank(h)


def _dual_tensor_span(h1: BinaryMatrix, h2: BinaryMatrix) -> BinaryMatrix:
    """Generators of ``C1 (x) F^n2 + F^n1 (x) C2``."""
    g1, g2 = kernel_basis(h1), kernel_basis(h2)
    i1, i2 = BinaryMatrix.identity(h1.cols), BinaryMatrix.identity(h2.cols)
    return BinaryMatrix.vstack([kronecker(g1, i2), kronecker(i1, g2)])


# ---------------------------------------------------------------------------
# statements


def _claim1(h: str):
    measured = classical_soundness_exact(duplicate_checks(_checks(h))).value
    return _report("Claim1", f"h={h}", 2 * _soundness(h), measured, Method.EXHAUSTIVE)


def _lemma2(h: str):
    H = _checks(h)
    q = duplicate_css(H)
    dx, dz = css_distances(q)
    predicted = {"n": 2 * H.cols, "k": 2 * _k(h), "d": 2, "soundness_lower": 2 * _soundness(h)}
    measured = {"n": q.n, "k": q.k, "d": min(dx, dz), "soundness_lower": quantum_soundness_interval(q).lower}
    return _report("Lemma2", f"h={h}", predicted, measured, Method.EXHAUSTIVE)


def _lemma3_1(h1: str, h2: str):
    A, B = _checks(h1), _checks(h2)
    span = _dual_tensor_span(A, B)
    prod = kronecker(A, B)
    predicted = {"dim": rank(span), "contained": True}
    measured = {"dim": prod.cols - rank(prod), "contained": mat_mul(prod, span.T).is_zero()}
    return _report("Lemma3.1", f"h1={h1};h2={h2}", predicted, measured, Method.RANK)


def _lemma3_2(h1: str, h2: str):
    A, B = _checks(h1), _checks(h2)
    n1, n2 = A.cols, B.cols
    predicted = n1 * n2 - (n1 - _k(h1)) * (n2 - _k(h2))
    code = check_product_classical(A, B)
    return _report("Lemma3.2", f"h1={h1};h2={h2}", predicted, code.k, Method.RANK)


def _lemma3_3(h1: str, h2: str):
    predicted = min(_distance(h1), _distance(h2))
    measured = classical_distance(check_product_classical(_checks(h1), _checks(h2)))
    return _report("Lemma3.3", f"h1={h1};h2={h2}", predicted, measured, Method.ENUMERATION)


def _lemma4(q: str, h: str):
    Q = _quantum(q)
    dc = _distance(h)
    d_cx = classical_distance(Q.x_code)
    d_cz = classical_distance(Q.z_code)
    dx, dz = css_distances(check_product_quantum(Q, _checks(h)))
    predicted = {"d_x": min(dc, d_cx), "d_z": min(dc, d_cz), "d": min(dc, d_cx, d_cz)}
    measured = {"d_x": dx, "d_z": dz, "d": min(dx, dz)}
    return _report("Lemma4", f"q={q};h={h}", predicted, measured, Method.ENUMERATION)


def _claim2(h: str):
    code = standardize_classical(ClassicalCode(_checks(h)))
    measured = classical_soundness_exact(code).value
    return _report("Claim2", f"h={h}", Fraction(code.n, code.m), measured, Method.EXHAUSTIVE, "ge")


def _corollary2(q: str):
    Q = _quantum(q)
    dx, dz = css_distances(Q)
    S = standardize_css(Q)
    sdx, sdz = css_distances(S)
    predicted = {
        "k": Q.k,
        "d_x": dx,
        "d_z": dz,
        "soundness_lower": min(Fraction(S.n, S.m_x), Fraction(S.n, S.m_z)),
    }
    measured = {"k": S.k, "d_x": sdx, "d_z": sdz, "soundness_lower": quantum_soundness_interval(S).lower}
    return _report(
        "Corollary2", f"q={q}", predicted, measured, Method.EXHAUSTIVE, {"soundness_lower": "ge"}
    )


def _lemma_cp_cltc(hx: str, h: str):
    std = standard_checks(_checks(hx))
    predicted = _soundness(h) * Fraction(std.cols, std.rows)
    measured = classical_soundness_exact(check_product_classical(std, _checks(h))).value
    return _report("LemmaCpCLTC", f"hx={hx};h={h}", predicted, measured, Method.EXHAUSTIVE, "ge")


@functools.lru_cache(maxsize=None)
def _cp_instance(q: str, h: str):
    return cp_standard_ltc(_quantum(q), ClassicalCode(_checks(h)), rho=_soundness(h))


def _theorem4_1(q: str, h: str):
    cp = _cp_instance(q, h)
    measured = quantum_soundness_interval(cp.code).lower
    return _report("Theorem4.1", f"q={q};h={h}", cp.claimed_soundness, measured, Method.EXHAUSTIVE, "ge")


def _theorem4_2(q: str, h: str):
    cp = _cp_instance(q, h)
    measured = min(css_distances(cp.code))
    return _report("Theorem4.2", f"q={q};h={h}", cp.claimed_distance, measured, Method.ENUMERATION)


def _theorem4_3(q: str, h: str):
    cp = _cp_instance(q, h)
    profiles = [locality_profile(cp.code.h_x), locality_profile(cp.code.h_z)]
    measured = max(max(p.max_row_weight, p.max_col_weight) for p in profiles)
    return _report("Theorem4.3", f"q={q};h={h}", cp.claimed_locality, measured, Method.RANK, "le")


def _theorem4_4(q: str, h: str):
    cp = _cp_instance(q, h)
    return _report("Theorem4.4", f"q={q};h={h}", cp.claimed_dimension, cp.code.k, Method.RANK)


def _lemma5_rate(n: int, seeds: Sequence[int]):
    ks = sorted({random_nested_css(n, s).k for s in seeds})
    instance = f"n={n};seeds={seeds[0]}..{seeds[-1]}"
    return _report("Lemma5-rate", instance, [n // 2], ks, Method.RANK)


def _balanced(h: str, ell: int, variant: str) -> CssCode:
    return complex_css(balanced_complex(_checks(h), ell, variant))


@functools.lru_cache(maxsize=None)
def _gauge_distances(h: str):
    return css_distances(gauge_fixed_duplicate(_checks(h)))


def _inst(h, ell, variant):
    return f"h={h};ell={ell};variant={RepetitionVariant.parse(variant).value}"


def _newpara_n(h: str, ell: int, variant: str = "star"):
    H = _checks(h)
    predicted = 2 * H.cols * ell + H.rows * (ell - 1)
    return _report("LemmaNewpara-N", _inst(h, ell, variant), predicted, _balanced(h, ell, variant).n, Method.RANK)


def _newpara_k(h: str, ell: int, variant: str = "star"):
    H = _checks(h)
    x = balanced_complex(H, ell, variant)
    q = complex_css(x)
    predicted = {"k": _k(h), "h1": _k(h)}
    measured = {"k": q.k, "h1": homology_dimension(x, 1)}
    return _report("LemmaNewpara-k", _inst(h, ell, variant), predicted, measured, Method.RANK)


def _newpara_dx(h: str, ell: int, variant: str = "star"):
    dx, _ = _gauge_distances(h)
    measured, _ = css_distances(_balanced(h, ell, variant))
    return _report("LemmaNewpara-dx", _inst(h, ell, variant), ell * dx, measured, Method.ENUMERATION)


def _newpara_dz(h: str, ell: int, variant: str = "star"):
    _, dz = _gauge_distances(h)
    _, measured = css_distances(_balanced(h, ell, variant))
    return _report("LemmaNewpara-dz", _inst(h, ell, variant), dz, measured, Method.ENUMERATION)


def balanced_locality(H: BinaryMatrix, ell: int, q: CssCode) -> dict:
    """Measured structural locality classes of a star-balanced code.

    Hub X-generators are those indexed ``c_i (x) v_ell``; hub qubits are
    ``q_i (x) v_ell``.  Light bounds are the ell-independent weights that
    every other generator and qubit must respect.
    """
    lay = balanced_layout(H, ell)
    x_w = [int(w) for w in q.h_x.row_weights()]
    z_deg = [int(d) for d in q.h_z.col_weights()]
    hub_gens = set(lay.hub_x_generators())
    hub_qubits = set(lay.hub_qubits())
    light_x = [w for i, w in enumerate(x_w) if i not in hub_gens]
    light_q = [d for i, d in enumerate(z_deg) if i not in hub_qubits]
    return {
        "hub_x_generators": len(hub_gens),
        "hub_x_min_weight": min((x_w[i] for i in hub_gens), default=0),
        "light_x_max_weight": max(light_x, default=0),
        "hub_qubits": len(hub_qubits),
        "hub_qubit_min_degree": min((z_deg[i] for i in hub_qubits), default=0),
        "hub_qubit_max_degree": max((z_deg[i] for i in hub_qubits), default=0),
        "hub_qubit_fraction": Fraction(len(hub_qubits), q.n),
        "light_qubit_max_degree": max(light_q, default=0),
        "x_generators_above_light_bound": sum(1 for w in x_w if w > max(light_x, default=0)),
    }


def _newpara_locality(h: str, ell: int, variant: str = "star"):
    H = _checks(h)
    q = _balanced(h, ell, variant)
    hx_row = 2 * int(H.row_weights().max(initial=0))
    predicted = {
        "hub_x_generators": H.rows,
        "hub_x_min_weight": ell,
        "light_x_max_weight": hx_row + 1,
        "hub_qubits": 2 * H.cols,
        "hub_qubit_min_degree": ell,
        "hub_qubit_max_degree": ell,
        "hub_qubit_fraction": Fraction(1, ell),
        "light_qubit_max_degree": max(hx_row, 2),
    }
    measured = balanced_locality(H, ell, q)
    relation = {
        "hub_x_min_weight": "ge",
        "light_x_max_weight": "le",
        "hub_qubit_fraction": "le",
        "light_qubit_max_degree": "le",
    }
    return _report("LemmaNewpara-locality", _inst(h, ell, variant), predicted, measured, Method.RANK, relation)


def _newsound_z(h: str, ell: int, variant: str = "star"):
    rho = classical_soundness_exact(duplicate_checks(_checks(h))).value
    measured = classical_soundness_exact(_balanced(h, ell, variant).x_code).value
    return _report("LemmaNewsound-Z", _inst(h, ell, variant), rho / 8, measured, Method.EXHAUSTIVE, "ge")


def _newsound_x(h: str, ell: int, variant: str = "star"):
    measured = classical_soundness_exact(_balanced(h, ell, variant).z_code).value
    return _report("LemmaNewsound-X", _inst(h, ell, variant), Fraction(1, 3), measured, Method.EXHAUSTIVE, "ge")


def _corollary_distbala(h: str, ell: int, variant: str = "line"):
    q = _balanced(h, ell, variant)
    predicted = {"k": _k(h), "d": min(_distance(h), 2 * ell)}
    measured = {"k": q.k, "d": min(css_distances(q))}
    return _report("CorollaryDistbala", _inst(h, ell, variant), predicted, measured, Method.ENUMERATION)


STATEMENTS: dict[str, Callable[..., VerificationReport]] = {
    "Claim1": _claim1,
    "Lemma2": _lemma2,
    "Lemma3.1": _lemma3_1,
    "Lemma3.2": _lemma3_2,
    "Lemma3.3": _lemma3_3,
    "Lemma4": _lemma4,
    "Claim2": _claim2,
    "Corollary2": _corollary2,
    "LemmaCpCLTC": _lemma_cp_cltc,
    "Theorem4.1": _theorem4_1,
    "Theorem4.2": _theorem4_2,
    "Theorem4.3": _theorem4_3,
    "Theorem4.4": _theorem4_4,
    "Lemma5-rate": _lemma5_rate,
    "LemmaNewpara-N": _newpara_n,
    "LemmaNewpara-k": _newpara_k,
    "LemmaNewpara-dx": _newpara_dx,
    "LemmaNewpara-dz": _newpara_dz,
    "LemmaNewpara-locality": _newpara_locality,
    "LemmaNewsound-Z": _newsound_z,
    "LemmaNewsound-X": _newsound_x,
    "CorollaryDistbala": _corollary_distbala,
}


def verify(statement_id: str, **params) -> VerificationReport:
    """Check one statement on one instance.

    >>> verify("Claim1", h="rep3").passed
    True
    """
    try:
        fn = STATEMENTS[statement_id]
    except KeyError:
        raise BadParameter(f"unknown statement {statement_id!r}") from None
    if "ell" in params:
        params["ell"] = int(params["ell"])
        if params["ell"] < 2:
            raise BadParameter("ell must be >= 2")
    return fn(**params)


def corpus_instances(statement_id: str, seed: int = 0) -> list[dict]:
    """Instances of the standard corpus on which ``statement_id`` is checked."""
    names = corpus.standard_corpus(seed)
    nested = f"nested:n=8:seed={seed}"
    classical = {"Claim1", "Lemma2", "Claim2"}
    pairs = {"Lemma3.1", "Lemma3.2", "Lemma3.3"}
    if statement_id in classical:
        return [{"h": h} for h in names]
    if statement_id in pairs:
        return [
            {"h1": a, "h2": b}
            for a, b in itertools.product(names, repeat=2)
            if _checks(a).cols * _checks(b).cols <= 100
        ]
    if statement_id == "Lemma4":
        return [{"q": q, "h": h} for q in ("css:ones4", "dup:rep3", "gauge:rep3") for h in ("rep3", "rep5", "hamming7")]
    if statement_id == "Corollary2":
        return [{"q": q} for q in ("dup:rep3", "gauge:rep3", "css:ones4", "dup:hamming7", nested)]
    if statement_id == "LemmaCpCLTC":
        return [{"hx": a, "h": b} for a in ("ones4", "rep3", "hamming7") for b in ("rep3", "rep5")]
    if statement_id.startswith("Theorem4."):
        return [{"q": q, "h": h} for q in ("css:ones4", "dup:rep3", nested) for h in ("rep3", "hamming7")]
    if statement_id == "Lemma5-rate":
        return [{"n": n, "seeds": tuple(range(seed, seed + 100))} for n in (8, 12, 16)]
    if statement_id.startswith("LemmaNewpara"):
        named = [{"h": h, "ell": ell, "variant": "star"} for h in ("rep3", "rep5", "hamming7") for ell in (2, 3, 4)]
        return named + [{"h": h, "ell": 2, "variant": "star"} for h in names[3:]]
    if statement_id.startswith("LemmaNewsound"):
        return [{"h": "rep3", "ell": ell, "variant": "star"} for ell in (2, 3, 4)] + [
            {"h": h, "ell": 2, "variant": "star"} for h in ("rep5", "hamming7")
        ]
    if statement_id == "CorollaryDistbala":
        return [{"h": h, "ell": ell, "variant": "line"} for h in ("rep3", "rep5", "hamming7") for ell in (2, 3, 4)]
    raise BadParameter(f"unknown statement {statement_id!r}")


def verify_all(
    statements: Iterable[str] | None = None, seed: int = 0, threads: int = 1
) -> list[VerificationReport]:
    """Run every statement over the standard corpus; report order is fixed."""
    ids = list(statements) if statements is not None else list(STATEMENTS)
    tasks = [(sid, params) for sid in ids for params in corpus_instances(sid, seed)]

    def run(task):
        sid, params = task
        return verify(sid, **params)

    if threads <= 1:
        return [run(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run, tasks))


# ---------------------------------------------------------------------------
# sweeps


def nested_distance_stats(n: int, seeds: Sequence[int]) -> dict:
    """Min/mean distances of ``C`` and ``D^perp`` over seeded nested samples."""
    dc, dd = [], []
    for s in seeds:
        q = random_nested_css(n, s)
        dc.append(classical_distance(q.x_code))
        dd.append(classical_distance(q.z_code))
    return {
        "n": n,
        "samples": len(dc),
        "min_d_C": min(dc),
        "mean_d_C": Fraction(sum(dc), len(dc)),
        "min_d_Dperp": min(dd),
        "mean_d_Dperp": Fraction(sum(dd), len(dd)),
    }


def build_code(family: str, p: dict) -> CssCode:
    if family == "duplicate":
        return duplicate_css(_checks(p["h"]))
    if family == "gauge":
        return gauge_fixed_duplicate(_checks(p["h"]))
    if family == "balanced":
        return _balanced(p["h"], int(p["ell"]), p.get("variant", "star"))
    if family == "check-product":
        return check_product_quantum(_quantum(p["q"]), _checks(p["h"]))
    if family == "cp-standard":
        return cp_standard_ltc(_quantum(p["q"]), ClassicalCode(_checks(p["h"]))).code
    if family == "nested":
        return random_nested_css(int(p["n"]), int(p.get("seed", 0)))
    if family == "standardize":
        return standardize_css(_quantum(p["q"]))
    raise BadParameter(f"unknown family {family!r}")


FAMILIES = ("duplicate", "gauge", "balanced", "check-product", "cp-standard", "nested", "standardize")

SWEEP_COLUMNS = (
    "family", "params", "N", "k", "d_x", "d_z", "soundness_lower", "soundness_upper",
    "max_row_weight", "max_col_weight", "avg_row_weight", "total_weight", "skipped",
)


def code_row(family: str, params: dict, cap: int | None = None) -> dict:
    label = ";".join(f"{k}={v}" for k, v in params.items())
    row = {c: "" for c in SWEEP_COLUMNS}
    row.update(family=family, params=label)
    try:
        q = build_code(family, params)
        dx, dz = css_distances(q, cap)
        interval = quantum_soundness_interval(q, cap)
    except (QltcError, KeyError) as exc:
        row["skipped"] = f"{type(exc).__name__}: {exc}"
        return row
    both = BinaryMatrix.vstack([q.h_x, q.h_z])
    prof = locality_profile(both)
    row.update(
        N=q.n, k=q.k, d_x=render(dx), d_z=render(dz),
        soundness_lower=render(interval.lower), soundness_upper=render(interval.upper),
        max_row_weight=prof.max_row_weight, max_col_weight=prof.max_col_weight,
        avg_row_weight=render(prof.avg_row_weight), total_weight=prof.total_weight,
    )
    return row


def parse_grid(spec: str) -> dict[str, list[str]]:
    """``"h=rep3,rep5;ell=2,3"`` -> ``{"h": ["rep3", "rep5"], "ell": ["2", "3"]}``.

    Values may themselves contain ``:`` and ``=`` (e.g. ``random:n=8:seed=1``);
    only the first ``=`` of each ``;``-separated field splits key from values.
    """
    grid: dict[str, list[str]] = {}
    for part in filter(None, (p.strip() for p in spec.split(";"))):
        key, sep, vals = part.partition("=")
        if not sep:
            raise BadParameter(f"malformed grid field {part!r}")
        grid[key.strip()] = [v.strip() for v in vals.split(",") if v.strip()]
    return grid


def sweep(family: str, grid: dict[str, Sequence], sink=None, threads: int = 1, cap: int | None = None) -> list[dict]:
    """One row per grid cell; infeasible cells become rows with ``skipped`` set."""
    if family not in FAMILIES:
        raise BadParameter(f"unknown family {family!r}")
    if not grid or any(len(v) == 0 for v in grid.values()):
        cells = []
    else:
        keys = list(grid)
        cells = [dict(zip(keys, combo)) for combo in itertools.product(*(grid[k] for k in keys))]
    if threads <= 1:
        rows = [code_row(family, c, cap) for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda c: code_row(family, c, cap), cells))
    if sink is not None:
        writer = csv.DictWriter(sink, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return rows
