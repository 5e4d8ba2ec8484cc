import json
import subprocess
import sys

import pytest

from dzrel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_relation_output(capsys):
    code, out, _ = run(capsys, "relation", "--type", "2", "--weight", "12", "--index", "1")
    assert code == 0
    data = json.loads(out)
    assert data["weight"] == 11
    assert data["coeffs"] == {"8": "28", "6": "20", "4": "-42"}
    assert data["lambda"] == "-3"


def test_zagier_output(capsys):
    code, out, _ = run(capsys, "zagier", "--K", "5", "--left-kernel")
    data = json.loads(out)
    assert data["matrix"][1][-1] == "329/2"
    assert len(data["left_kernel"]) == 1


def test_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "rel.json"
    assert main(["relation", "--type", "1", "--weight", "16", "--index", "0", "--output", str(path)]) == 0
    for mode in ("formal", "symmetric-h"):
        code, out, _ = run(capsys, "verify", "--mode", mode, "--relation", str(path))
        data = json.loads(out)
        assert code == 0 and data["holds"] and data["matches_lambda"]
    code, out, _ = run(capsys, "verify", "--mode", "numeric", "--relation", str(path), "--prec", "1e-13")
    assert json.loads(out)["passes"]


def test_verify_bad_relation(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"weight": 11, "coeffs": {"8": "1"}, "lambda": "0"}))
    code, out, _ = run(capsys, "verify", "--mode", "formal", "--relation", str(path))
    assert code == 0
    assert json.loads(out)["holds"] is False


def test_exit_codes(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "canonical", "--weight", "8")[0] == 1
    assert run(capsys, "zeta", "--s", "1")[0] == 1
    assert run(capsys, "relation", "--type", "2", "--weight", "12", "--index", "7")[0] == 1
    assert run(capsys, "verify", "--mode", "formal", "--relation", "/nonexistent.json")[0] == 1
    assert run(capsys)[0] == 2


def test_csv_table(capsys):
    code, out, _ = run(capsys, "--format", "csv", "restricted-sum", "--d", "3", "--i", "0", "--k", "9:13:2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("k,")
    assert [l.split(",")[0] for l in lines[1:]] == ["9", "11", "13"]
    assert run(capsys, "--format", "csv", "canonical", "--weight", "9")[0] == 2


def test_kernel_element_and_rank(capsys):
    code, out, _ = run(capsys, "kernel-element", "--weight", "11", "--type", "2", "--index", "1")
    assert json.loads(out)["vector"] in (["3", "-27", "13", "17", "-6"], ["-3", "27", "-13", "-17", "6"])
    code, out, _ = run(capsys, "rank", "--weight", "35")
    assert json.loads(out)["rank"] == 5


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "dzrel", "canonical", "--weight", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lambda"] == "-3/2"
