import csv
import json
import subprocess
import sys

import pytest

from ddlandscape.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_audit_star_all_hold(capsys):
    code, out, _ = run(["audit", "--family", "star", "--n", "7", "--cost", "identity"], capsys)
    assert code == 0
    assert "fails" not in out
    assert out.count("holds") == 7


def test_landscape_quasistar_csv(tmp_path, capsys):
    f = tmp_path / "q.csv"
    code, out, _ = run(["landscape", "--family", "quasistar", "--n", "12", "--format", "csv", "-o", str(f)], capsys)
    assert code == 0
    assert "1320 cells" in out and "min 31" in out and "max 75" in out
    rows = list(csv.reader(f.open()))
    assert rows[0] == ["l", "p", "q", "value"]
    assert len(rows) == 1321


def test_bounds_verify_oracle(tmp_path, capsys):
    f = tmp_path / "b.csv"
    args = ["bounds", "--n-min", "3", "--n-max", "9", "--families", "star,quasistar,path,balanced_bistar",
            "--verify-oracle", "-o", str(f)]
    code, out, _ = run(args, capsys)
    assert code == 0
    assert "0 mismatches" in out
    rows = list(csv.reader(f.open()))
    assert rows[0] == ["n", "family", "d_min", "d_max", "d_random", "source"]


def test_nothing_written_without_output(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, _ = run(["landscape", "--family", "star", "--n", "5"], capsys)
    assert code == 0
    assert list(tmp_path.iterdir()) == []


def test_expectation_mismatch_exit(capsys):
    args = ["audit", "--family", "star", "--n", "5", "--expect", "quasiconvex=fails"]
    code, out, _ = run(args, capsys)
    assert code == 1
    assert "expectation failed" in out
    code, _, _ = run(["audit", "--family", "star", "--n", "5", "--expect", "quasiconvex=holds"], capsys)
    assert code == 0


def test_oracle_cap_refusal(capsys):
    code, _, err = run(["oracle", "--family", "star", "--n", "10"], capsys)
    assert code == 3
    assert "cap 9" in err
    code, _, err = run(["oracle", "--family", "star", "--n", "5", "--oracle-cap", "4"], capsys)
    assert code == 3
    assert "cap 4" in err


@pytest.mark.parametrize(
    "args",
    [
        ["landscape", "--family", "path", "--n", "5"],
        ["landscape", "--family", "star", "--n", "2"],
        ["audit", "--family", "star", "--n", "5", "--expect", "nonsense"],
        ["audit", "--family", "star", "--n", "5", "--cost", "power:-1"],
        ["bounds", "--n-min", "9", "--n-max", "3"],
        ["bounds", "--n-min", "3", "--n-max", "5", "--families", "spider"],
        ["hubiness"],
        ["landscape", "--family", "quasistar", "--n", "6", "--slice-axis", "q"],
    ],
)
def test_usage_errors(args, capsys):
    code, _, err = run(args, capsys)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_error_exits_nonzero():
    with pytest.raises(SystemExit) as e:
        main(["landscape", "--format", "xml"])
    assert e.value.code == 2


def test_edges_file_and_hubiness(tmp_path, capsys):
    f = tmp_path / "t.txt"
    f.write_text("0 1\n0 2\n0 3\n1 4\n")
    out_json = tmp_path / "h.json"
    code, out, _ = run(["hubiness", "--edges", str(f), "-o", str(out_json)], capsys)
    assert code == 0
    obj = json.loads(out_json.read_text())
    assert obj["hubiness"] == "16/5"
    assert "quasistar" in obj["tags"]
    code, out, _ = run(["oracle", "--edges", str(f), "--cost", "power:2"], capsys)
    assert code == 0 and "120 enumerated" in out


def test_slice_csv_has_blank_holes(tmp_path, capsys):
    f = tmp_path / "s.csv"
    args = ["landscape", "--family", "quasistar", "--n", "6", "--slice-axis", "q", "--slice-value", "1", "-o", str(f)]
    assert run(args, capsys)[0] == 0
    rows = list(csv.reader(f.open()))
    assert len(rows) == 7 and len(rows[1]) == 7
    assert rows[1][1:] == [""] * 6  # l = q = 1 is a hole row
    assert rows[2][2] == ""  # l = p = 2
    assert sum(v != "" for r in rows[1:] for v in r[1:]) == 20


def test_audit_json_schema(tmp_path, capsys):
    f = tmp_path / "a.json"
    args = ["audit", "--family", "quasistar", "--n", "6", "--cost", "power:2", "--fast", "-o", str(f)]
    run(args, capsys)
    obj = json.loads(f.read_text())
    for e in obj["entries"]:
        assert {"property", "verdict", "witness", "skipped", "tolerance"} <= set(e)
    ls = next(e for e in obj["entries"] if e["property"] == "local_submodularity")
    assert ls["verdict"] == "fails"
    assert ls["witness"]["u"] in ([1, 0, -1], [-1, 0, 1], [1, 1, -1], [-1, -1, 1])


def test_planar_reduced_audit(capsys):
    args = ["audit", "--family", "quasistar", "--n", "7", "--planar", "--reduced"]
    code, out, _ = run(args, capsys)
    assert code == 0 and "fails" not in out


def test_oracle_samples_json(tmp_path, capsys):
    f = tmp_path / "o.json"
    run(["oracle", "--family", "star", "--n", "6", "--samples", "2000", "--seed", "4", "-o", str(f)], capsys)
    obj = json.loads(f.read_text())
    assert obj["min"] == 9 and obj["max"] == 15
    assert obj["argmin_count"] == 240
    assert obj["mean"] == "35/3"
    assert abs(obj["sample_mean"] - 35 / 3) < 0.5


DETERMINISM_CASES = [
    ["landscape", "--family", "quasistar", "--n", "7", "--format", "csv"],
    ["landscape", "--family", "quasistar", "--n", "7", "--format", "json", "--planar"],
    ["landscape", "--family", "quasistar", "--n", "6", "--format", "svg"],
    ["landscape", "--family", "star", "--n", "9", "--format", "svg", "--cost", "exp:2"],
    ["audit", "--family", "quasistar", "--n", "6", "--cost", "power:2"],
    ["bounds", "--n-min", "4", "--n-max", "8", "--format", "svg"],
    ["bounds", "--n-min", "4", "--n-max", "8", "--format", "json", "--verify-oracle"],
    ["oracle", "--family", "path", "--n", "7", "--samples", "500", "--seed", "11"],
]


@pytest.mark.parametrize("args", DETERMINISM_CASES, ids=lambda a: "-".join(a[:1] + a[-2:]))
def test_byte_identical(args, tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    assert a.stat().st_size > 0


def test_module_entry_point(tmp_path):
    out = tmp_path / "x.svg"
    cmd = [sys.executable, "-m", "ddlandscape", "landscape", "--family", "quasistar", "--n", "5", "--format", "svg"]
    r1 = subprocess.run(cmd + ["-o", str(out)], capture_output=True, text=True)
    assert r1.returncode == 0, r1.stderr
    first = out.read_bytes()
    r2 = subprocess.run(cmd + ["-o", str(out)], capture_output=True, text=True)
    assert r2.returncode == 0
    assert out.read_bytes() == first
    assert first.startswith(b"<?xml")
