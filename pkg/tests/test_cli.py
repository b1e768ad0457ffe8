from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import solver_basis
from formalfj import serialize
from formalfj.cli import RunConfig, main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_siegel_dims(capsys):
    code, out, err = run(["siegel", "dims", "--max-k", "12"], capsys)
    assert code == 0
    dims = {row["k"]: row["expected"] for row in json.loads(out)["data"]["dims"]}
    assert {k: dims[k] for k in (0, 4, 6, 8, 10, 12)} == {0: 1, 4: 1, 6: 1, 8: 1, 10: 2, 12: 3}
    manifest = json.loads(err)
    assert manifest["version"] == serialize.VERSION and manifest["output"].startswith("sha256:")


def test_siegel_dims_verify(capsys):
    code, out, _ = run(["siegel", "dims", "--max-k", "6", "--verify", "-M", "3", "-N", "4"], capsys)
    assert code == 0 and json.loads(out)["data"]["match"] is True


def test_jacobi_basis(tmp_path, capsys):
    out = tmp_path / "j.json"
    code, _, _ = run(["jacobi", "basis", "-k", "4", "-m", "1", "-N", "3", "-o", str(out)], capsys)
    assert code == 0
    basis = serialize.read_artifact(out)
    assert len(basis) == 1
    manifest = json.loads((tmp_path / "j.json.manifest.json").read_text())
    assert manifest["output"] == serialize.digest(out.read_text())


def test_solve_then_check(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, _, _ = run(["siegel", "solve", "-k", "10", "-M", "3", "-N", "4", "--no-stabilize",
                      "-o", str(out)], capsys)
    assert code == 0
    env = serialize.read_envelope(out)
    assert env["params"]["dimension"] == 2 and env["params"]["M"] == 3
    code, text, err = run(["fj", "check", str(out)], capsys)
    data = json.loads(text)["data"]
    assert code == 0 and data["symmetric"] is True and data["valid"] is True
    assert str(out) in json.loads(err)["inputs"]


def test_fj_algebra_commands(tmp_path, capsys):
    f, g = solver_basis(4)[0], solver_basis(6)[0]
    pf, pg = tmp_path / "f.json", tmp_path / "g.json"
    serialize.write_artifact(pf, f)
    serialize.write_artifact(pg, g)
    for cmd, kind in [(["fj", "tensor", str(pf), str(pg)], "fj_series"),
                      (["fj", "pair", str(pf), str(pg)], "fj_series"),
                      (["fj", "invert", str(pf)], "meromorphic_fj"),
                      (["fj", "quotient", str(pf), str(pg)], "meromorphic_fj")]:
        code, out, _ = run(cmd, capsys)
        assert code == 0 and json.loads(out)["kind"] == kind


def test_lattice_and_weil(tmp_path, capsys):
    gram = tmp_path / "gram.txt"
    gram.write_text("2 0\n0 2\n")
    disc = tmp_path / "disc.json"
    assert run(["lattice", "disc", str(gram), "-o", str(disc)], capsys)[0] == 0
    assert serialize.read_artifact(disc).orders == (2, 2)
    code, out, _ = run(["weil", "genus1", str(disc)], capsys)
    data = json.loads(out)["data"]
    assert code == 0 and data["checks"]["passed"] and len(data["S"]) == 4


def test_errors_are_machine_readable(tmp_path, capsys):
    gram = tmp_path / "gram.txt"
    gram.write_text("2 2\n2 2\n")
    code, _, err = run(["lattice", "disc", str(gram)], capsys)
    assert code == 1 and json.loads(err)["error"] == "DegenerateGram"
    code, _, err = run(["siegel", "solve", "-k", "5", "-M", "2", "-N", "3"], capsys)
    assert code == 1 and json.loads(err)["error"] == "UnsupportedWeight"
    code, _, err = run(["jacobi", "basis", "-k", "4", "-m", "1", "-N", "99"], capsys)
    assert code == 1 and "N=99" in json.loads(err)["message"]
    code, _, err = run(["fj", "check", str(tmp_path / "missing.json")], capsys)
    assert code == 1 and json.loads(err)["error"] == "FileNotFoundError"


def test_byte_identical_reruns(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(["siegel", "solve", "-k", "12", "-M", "2", "-N", "3", "--no-stabilize", "-o", str(p)],
            capsys)
    assert a.read_bytes() == b.read_bytes()


def test_run_config_round_trip():
    cfg = RunConfig("siegel solve", weight="10", M=3, N=4)
    assert RunConfig.from_json(json.loads(json.dumps(cfg.to_json()))) == cfg
    with pytest.raises(ValueError):
        RunConfig("siegel solve", weight="1/3").check()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "formalfj.cli", "siegel", "dims", "--max-k", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["kind"] == "siegel_dims"
