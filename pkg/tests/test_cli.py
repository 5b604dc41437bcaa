"""CLI subcommands, output formats, and exit codes."""

from __future__ import annotations

import json

import pytest

from treeirr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_family_table(capsys):
    code, out, _ = run(capsys, "compute", "--family", "star:5")
    assert code == 0
    assert "irr" in out and "12" in out


def test_compute_family_json(capsys):
    code, out, _ = run(capsys, "compute", "--family", "path:3",
                       "--index", "sigma,forgotten", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"sigma": "2", "forgotten": "10"}


def test_compute_file(tmp_path, capsys):
    f = tmp_path / "t.edges"
    f.write_text("3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "compute", "--file", str(f),
                       "--index", "sigma", "--format", "csv")
    assert code == 0
    assert out.strip() == "sigma,2"


def test_compute_bad_family_exits_2(capsys):
    code, _, err = run(capsys, "compute", "--family", "star:notanumber")
    assert code == 2
    assert "error" in err


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--degseq", "3,2,1,1,1",
                       "--count-only")
    assert code == 0
    assert out.strip() == "3"
    code, out, _ = run(capsys, "enumerate", "--degseq", "2,2,1,1",
                       "--mode", "iso", "--count-only")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(capsys, "enumerate", "--degseq", "1,1",
                       "--count-only")
    assert (code, out.strip()) == (0, "1")


def test_enumerate_cap_exit_4(capsys):
    path10 = ",".join(["2"] * 8 + ["1", "1"])
    code, _, err = run(capsys, "enumerate", "--degseq", path10,
                       "--count-only")
    assert code == 4
    code, out, _ = run(capsys, "enumerate", "--degseq", path10,
                       "--count-only", "--unsafe-cap", "--mode", "iso")
    assert (code, out.strip()) == (0, "1")


def test_extremal_json(capsys):
    code, out, _ = run(capsys, "extremal", "--degseq", "4,2,2,1,1,1,1",
                       "--index", "sigma", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["min"] == 28
    assert data["max"] == 32
    assert data["count_iso"] == 2
    assert data["min_witnesses"]


def test_verify_writes_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--claims", "C1,C3",
                       "--nmin", "3", "--nmax", "5",
                       "--out", str(out_path))
    assert code == 0
    assert "digest" in out
    data = json.loads(out_path.read_text())
    assert [b["id"] for b in data["claims"]] == ["C1", "C3"]


def test_verify_strict_exit_codes(capsys):
    code, _, _ = run(capsys, "verify", "--claims", "C1", "--nmax", "5",
                     "--strict")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--claims", "C2", "--nmax", "5",
                     "--strict")
    assert code == 3


def test_verify_unknown_claim_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--claims", "C99")
    assert code == 2
    assert "unknown" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["compute"])           # missing --family/--file
    assert exc.value.code == 2
