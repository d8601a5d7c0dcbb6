import json
import subprocess
import sys

import jsonschema
import pytest

from shapovalov.cli import main
from shapovalov.serialize import SCHEMAS


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_sform_invariants_example(capsys):
    status, out, _ = run(capsys, "sform-invariants", "--p", "2", "--r", "1", "--degree", "3")
    data = json.loads(out)
    assert status == 0
    assert data["computed"] == ["2", "2", "16"] and data["predicted"] == ["2", "2", "16"]
    assert data["match"] is True
    jsonschema.validate(data, SCHEMAS["sform_invariants"])


def test_shapovalov_example(capsys):
    status, out, _ = run(capsys, "shapovalov", "--family", "A", "--rank", "2", "--degree", "1")
    data = json.loads(out)
    assert status == 0 and data["computed"] == ["1", "3"] and data["predicted"] == ["1", "3"]
    jsonschema.validate(data, SCHEMAS["shapovalov"])


def test_gram_identity(capsys):
    status, out, _ = run(capsys, "gram", "--s", "1", "--degree", "5")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS["matrix"])
    assert data["entries"] == [[str(int(i == j)) for j in range(7)] for i in range(7)]


def test_gram_to_snf_round_trip(capsys, tmp_path, monkeypatch):
    for s, d in [(2, 3), (4, 4), (3, 5)]:
        path = tmp_path / f"x{s}_{d}.json"
        assert run(capsys, "gram", "--s", str(s), "--degree", str(d), "--output", str(path))[0] == 0
        _, snf_out, _ = run(capsys, "snf", "--input", str(path))
        jsonschema.validate(json.loads(snf_out), SCHEMAS["snf"])
        p, r = {2: (2, 1), 4: (2, 2), 3: (3, 1)}[s]
        _, inv_out, _ = run(capsys, "sform-invariants", "--p", str(p), "--r", str(r), "--degree", str(d))
        assert json.loads(snf_out)["invariant_factors"] == json.loads(inv_out)["computed"]


def test_snf_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"entries": [["2", "0"], ["1", "4"]]}'))
    status, out, _ = run(capsys, "snf")
    assert status == 0 and json.loads(out) == {"invariant_factors": ["1", "8"], "det": "8"}


def test_bad_arguments(capsys):
    for argv in (["gram", "--s", "0", "--degree", "2"],
                 ["sform-invariants", "--p", "4", "--r", "1", "--degree", "2"],
                 ["shapovalov", "--family", "D", "--rank", "3", "--degree", "1"],
                 ["transition", "--from", "p", "--to", "p", "--degree", "2"],
                 ["nonsense"],
                 ["bases", "--p", "2", "--r", "2", "--dmax", "3", "--family", "G"]):
        status, out, err = run(capsys, *argv)
        assert status == 2, argv
        record = json.loads(err)
        jsonschema.validate(record, SCHEMAS["error"])
        assert record["error"] == "usage" and out == ""


def test_bad_matrix_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("not json")
    assert run(capsys, "snf", "--input", str(path))[0] == 2
    path.write_text('{"entries": [["1/2"]]}')
    assert run(capsys, "snf", "--input", str(path))[0] == 2


def test_cross_check_status(capsys, monkeypatch):
    from shapovalov import cli
    from shapovalov.matrix import CrossCheckError

    def boom(s, d):
        raise CrossCheckError("forced disagreement")
    monkeypatch.setattr(cli, "gram_s_form", boom)
    status, _, err = run(capsys, "gram", "--s", "2", "--degree", "2")
    assert status == 3 and json.loads(err)["error"] == "cross_check"


def test_verify_conjectural_banner(capsys):
    status, out, err = run(capsys, "verify", "--p", "2", "--r", "3", "--dmax", "3")
    assert status == 0 and "conjectural regime" in err
    jsonschema.validate(json.loads(out), SCHEMAS["report"])
    status, out, err = run(capsys, "verify", "--p", "3", "--r", "1", "--dmax", "4")
    assert "conjectural" not in err and json.loads(out)["all_match"] is True


def test_other_subcommands(capsys):
    status, out, _ = run(capsys, "transition", "--from", "p", "--to", "m", "--degree", "2")
    assert json.loads(out)["entries"] == [["1", "0"], ["1", "2"]]
    status, out, _ = run(capsys, "hecke-blocks", "--l", "6", "--dmax", "1")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS["hecke_blocks"])
    assert data["degrees"][1] == {"d": 1, "invariants": ["1", "1", "1", "1", "6"], "provenance": "formula"}
    for fam, r in (("g", 2), ("G", 1), ("M", 2)):
        status, out, _ = run(capsys, "bases", "--p", "2", "--r", str(r), "--dmax", "4", "--family", fam)
        data = json.loads(out)
        assert status == 0 and all(data["checks"].values())
        for f in data["families"]:
            jsonschema.validate(f, SCHEMAS["basis_family"])


@pytest.mark.parametrize("argv", [
    ["gram", "--s", "3", "--degree", "3"],
    ["verify", "--p", "2", "--r", "1", "--dmax", "3"],
    ["shapovalov", "--family", "D", "--rank", "4", "--degree", "1"],
    ["bases", "--p", "3", "--r", "1", "--dmax", "3", "--family", "G"],
])
def test_csv_and_determinism(capsys, argv):
    first = run(capsys, *argv, "--format", "csv")[1]
    second = run(capsys, *argv, "--format", "csv")[1]
    assert first == second and first.count("\n") >= 2
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shapovalov", "gram", "--s", "2", "--degree", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["entries"] == [["2", "0"], ["1", "4"]]
    proc = subprocess.run([sys.executable, "-m", "shapovalov", "gram", "--degree", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
