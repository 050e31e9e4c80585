import csv
import io
import json
import subprocess
import sys

import pytest

from qltclab import analysis
from qltclab.cli import main
from qltclab.io import alist_read, bundle_load


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_construct_balanced(tmp_path):
    path = tmp_path / "q.bundle"
    code, out = run("construct", "balanced", "--h", "rep3", "--ell", "2", "--variant", "star", "--out", str(path))
    assert code == 0
    assert json.loads(out)["N"] == 14
    b = bundle_load(path)
    assert b.matrices["h_x"].cols == 14
    assert b.metadata["construction"] == "balanced"


def test_construct_rejects_small_ell(tmp_path, capsys):
    code, _ = run("construct", "balanced", "--h", "rep3", "--ell", "1", "--out", str(tmp_path / "x"))
    assert code == 2
    assert "usage:" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("construct", "balanced", "--out", "x")[0] == 2
    assert run("verify", "Lemma99")[0] == 2
    assert run("--threads", "0", "verify", "Claim1")[0] == 2
    assert run("analyze", "/nonexistent/q.bundle")[0] == 2


def test_verify_all_json():
    code, out = run("verify", "all", "--corpus", "standard", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {r["statement"] for r in rows} == set(analysis.STATEMENTS)
    assert all(list(r) == ["statement", "instance", "predicted", "measured", "pass", "method"] for r in rows)
    assert all(r["pass"] for r in rows)


def test_verify_single_text():
    code, out = run("verify", "Claim1", "--h", "rep3")
    assert code == 0
    assert out.startswith("PASS Claim1 [h=rep3]")


def test_verify_failure_exit_code(monkeypatch):
    def failing(h):
        return analysis._report("Claim1", f"h={h}", 2, 1, analysis.Method.EXHAUSTIVE)

    monkeypatch.setitem(analysis.STATEMENTS, "Claim1", failing)
    code, out = run("verify", "Claim1", "--h", "rep3", "--json")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_threads_identical():
    a = run("--seed", "7", "verify", "all", "--json")
    b = run("--seed", "7", "--threads", "4", "verify", "all", "--json")
    assert a == b


def test_analyze(tmp_path):
    path = tmp_path / "q.bundle"
    run("construct", "gauge", "--h", "rep3", "--out", str(path))
    code, out = run("analyze", str(path), "--distance", "--soundness", "exact", "--locality")
    assert code == 0
    res = json.loads(out)
    assert (res["N"], res["k"], res["d_x"], res["d_z"]) == (6, 1, 2, 3)
    assert "/" in res["soundness"]["lower"]
    assert res["locality"]["h_x"]["max_row_weight"] == 4
    code, out = run("--seed", "1", "analyze", str(path), "--soundness", "sampled", "--trials", "20")
    assert json.loads(out)["soundness"]["x"]["method"] == "sampled"


def test_sweep_csv(tmp_path):
    path = tmp_path / "t.csv"
    code, _ = run("sweep", "balanced", "--grid", "h=rep3;ell=2,3,4;variant=star", "--csv", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert [r["d_x"] for r in rows] == ["4", "6", "8"]


def test_export_alist(tmp_path):
    path = tmp_path / "q.bundle"
    run("construct", "duplicate", "--h", "rep3", "--out", str(path))
    code, out = run("export", str(path), "--format", "alist")
    assert code == 0
    files = out.split()
    assert len(files) == 2
    b = bundle_load(path)
    with open(files[0]) as fh:
        assert alist_read(fh) == b.matrices["h_x"]
    code, out = run("export", str(path), "--matrix", "h_z", "--out-dir", "-")
    assert alist_read(out) == b.matrices["h_z"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qltclab.cli", "verify", "Claim2", "--h", "hamming7", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
