import io
import json
import subprocess
import sys

import pytest

from excyclic.cli import main
from excyclic.experiments import REGISTRY, run_experiment


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def gen_json(monkeypatch, capsys, *argv):
    code, out, _ = run(["gen", *argv], monkeypatch=monkeypatch, capsys=capsys)
    assert code == 0
    return out


def test_gen_then_hull(monkeypatch, capsys):
    z = gen_json(monkeypatch, capsys, "--mode", "vandermonde", "--nodes", "1,2,3,4,5,6", "--rows", "4")
    code, out, err = run(["hull", "--k", "2"], z, monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["f_vector"] == [15, 75, 143, 111, 30, 1]
    assert "f-vector" in err


def test_twist_then_bases(monkeypatch, capsys):
    z = gen_json(monkeypatch, capsys, "--mode", "random", "--n", "6", "--seed", "1")
    code, w, _ = run(["twist", "--k", "2", "--m", "2"], z, monkeypatch, capsys)
    assert code == 0
    code, out, _ = run(["matroid", "--k", "2", "--enum", "bases"], w, monkeypatch, capsys)
    assert json.loads(out)["count"] == 3345


def test_wedge_and_schubert(monkeypatch, capsys):
    z = gen_json(monkeypatch, capsys, "--n", "6", "--seed", "2")
    code, out, _ = run(["wedge", "--k", "2"], z, monkeypatch, capsys)
    assert json.loads(out)["rows"] == 6
    code, out, _ = run(["schubert", "--k", "2"], z, monkeypatch, capsys)
    assert json.loads(out)["counts"] == {"NON_SCHUBERT": 15, "SCHUBERT": 15}


@pytest.mark.parametrize("method", ["bar", "cone", "signflip"])
def test_amp_member_of_sample(method, monkeypatch, capsys, tmp_path):
    z = json.loads(gen_json(monkeypatch, capsys, "--n", "7", "--seed", "3"))
    code, y, _ = run(["amp", "sample", "--seed", "4"], json.dumps(z), monkeypatch, capsys)
    doc = tmp_path / "zy.json"
    doc.write_text(json.dumps({"z": z, "y": json.loads(y)}))
    code, out, _ = run(["amp", "member", "--method", method, "--input", str(doc)], "", monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["member"] in (True, "INSIDE")


def test_output_file(monkeypatch, capsys, tmp_path):
    target = tmp_path / "z.json"
    run(["gen", "--n", "5", "--output", str(target)], "", monkeypatch, capsys)
    assert json.loads(target.read_text())["cols"] == 5


def test_malformed_json_reports_offset(monkeypatch, capsys):
    code, _, err = run(["hull"], '{"rows": 2,, }', monkeypatch, capsys)
    assert code == 2
    assert "byte offset 11" in err


def test_non_positive_matrix_names_minor(monkeypatch, capsys):
    bad = json.dumps({"rows": 2, "cols": 3, "entries": [["1", "2", "3"], ["1", "1", "9"]]})
    code, _, err = run(["hull", "--k", "1"], bad, monkeypatch, capsys)
    assert code == 2
    assert "minor on columns (1, 2)" in err


def test_unknown_experiment_lists_registry(monkeypatch, capsys):
    code, _, err = run(["verify", "nope"], "", monkeypatch, capsys)
    assert code == 2
    assert all(name in err for name in REGISTRY)


def test_verify_separation(monkeypatch, capsys):
    code, out, _ = run(["verify", "separation", "--n", "7", "--seed", "3", "--trials", "5"], "", monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["status"] == "PASS"


def test_verify_fail_exit_code(monkeypatch, capsys):
    code, out, _ = run(["verify", "positroid-circuits", "--n", "6"], "", monkeypatch, capsys)
    assert code == 1
    assert json.loads(out)["status"] == "FAIL"


def test_reports_are_deterministic():
    a = run_experiment("c226-counts").to_json()
    b = run_experiment("c226-counts").to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["anchor"]


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "excyclic", "gen", "--n", "6", "--seed", "9"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
