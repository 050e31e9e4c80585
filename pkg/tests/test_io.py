import io

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qltclab.corpus import repetition_checks
from qltclab.errors import DegreeOverflow, IoError, ParseError, ValidationFailed
from qltclab.f2 import BinaryMatrix
from qltclab.homology import distance_balanced_css
from qltclab.io import (
    BUNDLE_HEADER,
    CodeBundle,
    alist_dumps,
    alist_read,
    alist_write,
    bundle_dumps,
    bundle_load,
    bundle_loads,
    bundle_save,
)


def test_alist_rep3_layout():
    text = alist_dumps(repetition_checks(3))
    lines = text.splitlines()
    assert lines[0] == "3 2"
    assert lines[1] == "2 2"
    assert lines[2] == "1 2 1"
    assert lines[3] == "2 2"
    assert lines[4:7] == ["1 0", "1 2", "2 0"]
    assert lines[7:] == ["1 2", "2 3"]


def test_alist_identity_minimal():
    assert alist_dumps(BinaryMatrix.identity(1)) == "1 1\n1 1\n1\n1\n1\n1\n"
    assert alist_read("1 1\n1 1\n1\n1\n1\n1\n") == BinaryMatrix.identity(1)


@given(st.tuples(st.integers(0, 6), st.integers(0, 9)).flatmap(
    lambda s: arrays(np.uint8, s, elements=st.integers(0, 1))))
def test_alist_round_trip(a):
    m = BinaryMatrix.from_dense(a, cols=a.shape[1])
    buf = io.StringIO()
    alist_write(m, buf)
    buf.seek(0)
    assert alist_read(buf) == m


def test_alist_truncated():
    with pytest.raises(ParseError, match="row degrees") as exc:
        alist_read("3 2\n2 2\n1 2 1\n")
    assert exc.value.line == 4
    with pytest.raises(ParseError, match="row index list 2"):
        alist_read("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n")


def test_alist_degree_overflow():
    with pytest.raises(DegreeOverflow):
        alist_read("3 2\n1 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n")
    with pytest.raises(DegreeOverflow):
        alist_read("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2 3\n2 3\n")


def test_alist_inconsistent_lists():
    with pytest.raises(ParseError, match="disagrees"):
        alist_read("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 3\n2 3\n")
    with pytest.raises(ParseError, match="out of range"):
        alist_read("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 5\n2 0\n1 2\n2 3\n")
    with pytest.raises(ParseError, match="non-integer"):
        alist_read("3 x\n")


def _bundle(reports=()):
    q = distance_balanced_css(repetition_checks(3), 2, "star")
    meta = {"construction": "balanced", "params": "h=rep3;ell=2;variant=star", "seed": "0"}
    return CodeBundle(meta, {"h_x": q.h_x, "h_z": q.h_z}, list(reports))


def test_bundle_round_trip(tmp_path):
    b = _bundle([{"statement": "Claim1", "measured": "3/1", "pass": True}])
    path = tmp_path / "q.bundle"
    bundle_save(b, path)
    assert path.read_text().splitlines()[0] == BUNDLE_HEADER
    assert bundle_load(path) == b


def test_bundle_without_reports():
    b = bundle_loads(bundle_dumps(_bundle()))
    assert b.reports == []
    assert b.matrices["h_x"].cols == 14


def test_bundle_corrupted_bit():
    text = bundle_dumps(_bundle())
    lines = text.splitlines()
    start = lines.index("matrix h_z") + 1
    end = lines.index("end", start)
    a = alist_read("\n".join(lines[start:end])).to_dense()
    a[0, np.flatnonzero(a[0] == 0)[0]] = 1
    lines[start:end] = alist_dumps(BinaryMatrix.from_dense(a)).splitlines()
    with pytest.raises(ValidationFailed):
        bundle_loads("\n".join(lines) + "\n")


def test_bundle_bad_header_and_paths(tmp_path):
    with pytest.raises(ParseError):
        bundle_loads("NOT-A-BUNDLE\n")
    with pytest.raises(IoError):
        bundle_load(tmp_path / "missing.bundle")
    with pytest.raises(ParseError, match="end"):
        bundle_loads(BUNDLE_HEADER + "\nmatrix h\n1 1\n")
