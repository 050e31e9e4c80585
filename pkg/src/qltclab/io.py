"""alist matrix files and the versioned code-bundle format."""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from .errors import DegreeOverflow, IoError, ParseError, ValidationFailed
from .f2 import BinaryMatrix, mat_mul

BUNDLE_HEADER = "QLTCLAB-BUNDLE v1"


# ---------------------------------------------------------------------------
# alist


def alist_write(m: BinaryMatrix, sink: IO[str]) -> None:
    """Write ``m`` (``rows x cols``) in alist form: the header is ``"cols rows"``."""
    dense = m.to_dense()
    col_sets = [np.flatnonzero(dense[:, j]) + 1 for j in range(m.cols)]
    row_sets = [np.flatnonzero(dense[i]) + 1 for i in range(m.rows)]
    max_c = max((len(s) for s in col_sets), default=0)
    max_r = max((len(s) for s in row_sets), default=0)

    def padded(idx, width):
        return " ".join(str(int(v)) for v in list(idx) + [0] * (width - len(idx)))

    lines = [
        f"{m.cols} {m.rows}",
        f"{max_c} {max_r}",
        " ".join(str(len(s)) for s in col_sets),
        " ".join(str(len(s)) for s in row_sets),
    ]
    lines += [padded(s, max_c) for s in col_sets]
    lines += [padded(s, max_r) for s in row_sets]
    sink.write("\n".join(lines) + "\n")


def alist_dumps(m: BinaryMatrix) -> str:
    buf = io.StringIO()
    alist_write(m, buf)
    return buf.getvalue()


class _Lines:
    def __init__(self, lines: list[str], offset: int):
        self.lines = lines
        self.pos = 0
        self.offset = offset

    @property
    def lineno(self) -> int:
        return self.offset + self.pos + 1

    def ints(self, section: str) -> list[int]:
        if self.pos >= len(self.lines):
            raise ParseError(f"truncated file: missing {section}", self.lineno)
        raw = self.lines[self.pos]
        try:
            vals = [int(t) for t in raw.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {section}: {raw.strip()!r}", self.lineno) from None
        self.pos += 1
        return vals


def _parse_alist(lines: list[str], offset: int = 0) -> BinaryMatrix:
    src = _Lines(lines, offset)
    head = src.ints("header")
    if len(head) != 2 or min(head) < 0:
        raise ParseError("header must be 'n m'", src.lineno - 1)
    n, m = head
    maxd = src.ints("max degrees")
    if len(maxd) != 2 or min(maxd) < 0:
        raise ParseError("max degree line must hold two counts", src.lineno - 1)
    max_c, max_r = maxd
    col_deg = src.ints("column degrees")
    if len(col_deg) != n:
        raise ParseError(f"expected {n} column degrees, got {len(col_deg)}", src.lineno - 1)
    row_deg = src.ints("row degrees")
    if len(row_deg) != m:
        raise ParseError(f"expected {m} row degrees, got {len(row_deg)}", src.lineno - 1)
    for degs, cap, what in ((col_deg, max_c, "column"), (row_deg, max_r, "row")):
        for d in degs:
            if d < 0:
                raise ParseError(f"negative {what} degree", src.lineno - 1)
            if d > cap:
                raise DegreeOverflow(f"{what} degree {d} exceeds declared maximum {cap}", src.lineno - 1)

    dense = np.zeros((m, n), dtype=np.uint8)
    for j in range(n):
        vals = src.ints(f"column index list {j + 1}")
        _check_list(vals, col_deg[j], max_c, m, src.lineno - 1, "column")
        for v in vals:
            if v:
                dense[v - 1, j] = 1
    for i in range(m):
        vals = src.ints(f"row index list {i + 1}")
        _check_list(vals, row_deg[i], max_r, n, src.lineno - 1, "row")
        got = {v for v in vals if v}
        want = set((np.flatnonzero(dense[i]) + 1).tolist())
        if got != want:
            raise ParseError(f"row {i + 1} disagrees with the column lists", src.lineno - 1)
    for extra in src.lines[src.pos:]:
        if extra.strip():
            raise ParseError("unexpected trailing data", src.lineno)
        src.pos += 1
    return BinaryMatrix.from_dense(dense, cols=n)


def _check_list(vals, degree, cap, bound, line, what):
    nz = [v for v in vals if v]
    if len(nz) > cap:
        raise DegreeOverflow(f"{what} list longer than declared maximum {cap}", line)
    if len(nz) != degree:
        raise ParseError(f"{what} list has {len(nz)} entries, declared degree {degree}", line)
    if any(v < 0 or v > bound for v in nz):
        raise ParseError(f"{what} index out of range 1..{bound}", line)
    if len(set(nz)) != len(nz):
        raise ParseError(f"repeated index in {what} list", line)


def alist_read(source: IO[str] | str) -> BinaryMatrix:
    """Parse an alist file object or string."""
    text = source if isinstance(source, str) else source.read()
    return _parse_alist(text.splitlines())


# ---------------------------------------------------------------------------
# bundles


@dataclass
class CodeBundle:
    metadata: dict[str, str] = field(default_factory=dict)
    matrices: dict[str, BinaryMatrix] = field(default_factory=dict)
    reports: list[dict] = field(default_factory=list)

    def validate(self) -> None:
        hx, hz = self.matrices.get("h_x"), self.matrices.get("h_z")
        if (hx is None) != (hz is None):
            raise ValidationFailed("bundle holds only one of h_x, h_z")
        if hx is not None:
            if hx.cols != hz.cols:
                raise ValidationFailed(f"h_x has {hx.cols} columns, h_z has {hz.cols}")
            if not mat_mul(hx, hz.T).is_zero():
                raise ValidationFailed("h_x and h_z do not commute")


def bundle_dumps(b: CodeBundle) -> str:
    out = [BUNDLE_HEADER]
    for key, val in b.metadata.items():
        if "\n" in str(val) or ":" in key:
            raise IoError(f"metadata entry {key!r} cannot be serialized")
        out.append(f"{key}: {val}")
    for name, mat in b.matrices.items():
        out.append(f"matrix {name}")
        out.append(alist_dumps(mat).rstrip("\n"))
        out.append("end")
    for rep in b.reports:
        out.append("report " + json.dumps(rep, sort_keys=True))
    return "\n".join(out) + "\n"


def bundle_loads(text: str) -> CodeBundle:
    lines = text.splitlines()
    if not lines or lines[0].strip() != BUNDLE_HEADER:
        raise ParseError(f"missing '{BUNDLE_HEADER}' header", 1)
    b = CodeBundle()
    i = 1
    while i < len(lines):
        line = lines[i]
        if not line.strip():
            i += 1
            continue
        if line.startswith("matrix "):
            name = line[len("matrix "):].strip()
            try:
                end = lines.index("end", i + 1)
            except ValueError:
                raise ParseError(f"matrix {name} has no 'end' line", i + 1) from None
            b.matrices[name] = _parse_alist(lines[i + 1:end], offset=i + 1)
            i = end + 1
            continue
        if line.startswith("report "):
            try:
                b.reports.append(json.loads(line[len("report "):]))
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad report JSON: {exc.msg}", i + 1) from None
            i += 1
            continue
        key, sep, val = line.partition(":")
        if not sep:
            raise ParseError(f"unrecognised line {line!r}", i + 1)
        b.metadata[key.strip()] = val.strip()
        i += 1
    b.validate()
    return b


def bundle_save(b: CodeBundle, path: str | os.PathLike) -> None:
    b.validate()
    text = bundle_dumps(b)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror}") from exc


def bundle_load(path: str | os.PathLike) -> CodeBundle:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror}") from exc
    return bundle_loads(text)

