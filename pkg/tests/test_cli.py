import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from partlogic.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv, **kw):
    code, out, err = run(capsys, *argv, **kw)
    assert code == 0, err
    return json.loads(out)


def test_entropy_halves(capsys):
    out = run_json(capsys, "entropy", str(SAMPLES / "halves.json"))
    assert out["logical"] == 0.5 and out["shannon"] == 1.0 and out["dits"] == 8


def test_entropy_indiscrete_from_stdin(capsys, monkeypatch):
    doc = {"universe": {"labels": ["a", "b", "c"]}, "partition": {"blocks": [[0, 1, 2]]}}
    out = run_json(capsys, "entropy", stdin=json.dumps(doc), monkeypatch=monkeypatch)
    assert out["logical"] == 0 and out["shannon"] == 0


def test_entropy_attribute_input(capsys, monkeypatch):
    doc = {"universe": {"labels": ["a", "b", "c", "d"]}, "attribute": {"values": [1, 1, 2, 2]}}
    out = run_json(capsys, "entropy", "-", stdin=json.dumps(doc), monkeypatch=monkeypatch)
    assert out["logical"] == 0.5


def test_entropy_density_input(capsys, monkeypatch):
    doc = {"density": {"dim": 2, "re": [[0.5, 0], [0, 0.5]], "im": [[0, 0], [0, 0]]}}
    out = run_json(capsys, "entropy", "-", stdin=json.dumps(doc), monkeypatch=monkeypatch)
    assert out["logical"] == 0.5
    assert out["von_neumann"] == pytest.approx(1.0)
    pure = {"density": {"dim": 2, "re": [[0.5, 0.5], [0.5, 0.5]]}}
    out = run_json(capsys, "entropy", "-", stdin=json.dumps(pure), monkeypatch=monkeypatch)
    assert abs(out["logical"]) < 1e-12 and abs(out["von_neumann"]) < 1e-12


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        json.dumps({"universe": {"labels": ["a", "b"]}, "partition": {"blocks": [[0], [0, 1]]}}),
        json.dumps({"universe": {"labels": ["a", "b"]}}),
        json.dumps([1, 2]),
        json.dumps({"density": {"dim": 2, "re": [[1, 1], [0, 0]]}}),
    ],
)
def test_malformed_input_exits_2(capsys, monkeypatch, payload):
    code, out, err = run(capsys, "entropy", "-", stdin=payload, monkeypatch=monkeypatch)
    assert code == 2
    assert out == "" and err.startswith("partlogic:")


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "entropy", "/nonexistent/file.json")
    assert code == 2 and "partlogic" in err


def test_measure(capsys):
    out = run_json(capsys, "measure", str(SAMPLES / "uniform3_state.json"), str(SAMPLES / "f112.json"))
    probs = [o["probability"] for o in out["outcomes"]]
    assert probs == pytest.approx([2 / 3, 1 / 3], abs=1e-12)
    assert out["logical_entropy_after"] == pytest.approx(4 / 9, abs=1e-12)
    assert out["theorem2_residual"] < 1e-10
    assert out["definite"] is False


def test_measure_eigenstate_definite(capsys, tmp_path):
    state = tmp_path / "s.json"
    state.write_text(json.dumps({"basis": ["u1", "u2", "u3"], "re": [0, 0, 1]}))
    out = run_json(capsys, "measure", str(state), str(SAMPLES / "f112.json"))
    assert out["definite"] is True and out["definite_value"] == 2
    assert out["logical_entropy_after"] == 0


def test_measure_samples_reproducible(capsys):
    argv = ("measure", str(SAMPLES / "uniform3_state.json"), str(SAMPLES / "f112.json"),
            "--samples", "10000", "--seed", "7")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    freqs = json.loads(first)["samples"]["frequencies"]
    assert sum(f["count"] for f in freqs) == 10000
    assert freqs[0]["frequency"] == pytest.approx(2 / 3, abs=0.02)
    first = json.loads(first)["samples"]["first"]
    assert first["eigenvalue"] in (1.0, 2.0) and set(first["post_state"]) == {"basis", "re", "im"}


def test_measure_basis_mismatch(capsys, tmp_path):
    obs = tmp_path / "o.json"
    obs.write_text(json.dumps({"basis": ["x", "y", "z"], "eigenvalues": [1, 1, 2]}))
    code, _, err = run(capsys, "measure", str(SAMPLES / "uniform3_state.json"), str(obs))
    assert code == 2 and "BasisMismatch" in err


def test_luders_classical(capsys):
    out = run_json(capsys, "luders", str(SAMPLES / "subset_luders.json"))
    assert out["zeroed_sum"] == pytest.approx(0.5)
    assert out["logical_after"] == pytest.approx(0.5)
    assert out["theorem_residual"] < 1e-10


def test_luders_quantum(capsys, monkeypatch):
    doc = {
        "state": json.loads((SAMPLES / "uniform3_state.json").read_text()),
        "observable": json.loads((SAMPLES / "f112.json").read_text()),
    }
    out = run_json(capsys, "luders", stdin=json.dumps(doc), monkeypatch=monkeypatch)
    assert out["logical_after"] == pytest.approx(4 / 9)


def test_join(capsys):
    out = run_json(capsys, "join", str(SAMPLES / "join.json"))
    assert out["complete"] is True
    assert out["join"]["blocks"] == [[0], [1], [2], [3]]
    assert out["dits"] == 12


def test_evolve(capsys):
    out = run_json(capsys, "evolve", str(SAMPLES / "plus_state.json"), str(SAMPLES / "hamiltonian.json"),
                   "--time", "1")
    re, im = out["state"]["re"], out["state"]["im"]
    assert re[0] == pytest.approx(2**-0.5) and re[1] == pytest.approx(-(2**-0.5))
    assert abs(im[0]) < 1e-12 and abs(im[1]) < 1e-12


def test_scenarios(capsys):
    mz = run_json(capsys, "scenario", "mach-zehnder")
    assert mz["distributions"]["detectors"] == pytest.approx([0, 1], abs=1e-12)
    mz = run_json(capsys, "scenario", "mach-zehnder", "--which-path")
    assert mz["distributions"]["detectors"] == pytest.approx([0.5, 0.5], abs=1e-12)
    ds = run_json(capsys, "scenario", "double-slit", "--bins", "41")
    assert len(ds["distributions"]["screen"]) == 41
    fy = run_json(capsys, "scenario", "feynman", "--amplitudes", "0.7071067811865476", "-0.7071067811865476")
    assert fy["parameters"]["probability"] == pytest.approx(0, abs=1e-15)
    fy = run_json(capsys, "scenario", "feynman", "--distinguishable", "--amplitudes",
                  "0.7071067811865476", "-0.7071067811865476")
    assert fy["parameters"]["probability"] == pytest.approx(1)


def test_feynman_super_unity_flagged(capsys):
    fy = run_json(capsys, "scenario", "feynman", "--amplitudes", "0.7071067811865476", "0.7071067811865476")
    assert fy["notes"]
    code, _, _ = run(capsys, "scenario", "feynman", "--amplitudes", "1", "1")
    assert code == 2


def test_double_slit_bad_bins(capsys):
    code, _, err = run(capsys, "scenario", "double-slit", "--bins", "1")
    assert code == 2 and "BadBinCount" in err


@pytest.mark.parametrize("theorem", ["theorem1", "theorem2"])
def test_verify(capsys, theorem):
    out = run_json(capsys, "verify", theorem, "--trials", "50", "--seed", "3", "--dim", "6")
    assert out["passed"] and out["trials"] == 50 and out["max_residual"] < 1e-10


def test_verify_tolerance_violation_exits_3(capsys):
    code, _, err = run(capsys, "verify", "theorem2", "--trials", "20", "--tolerance", "0")
    assert code == 3 and "numeric policy" in err


def test_table_output(capsys):
    code, out, _ = run(capsys, "entropy", str(SAMPLES / "halves.json"), "--table")
    assert code == 0
    assert out.splitlines()[0].split() == ["logical", "0.5"]


def test_byte_identical_output(capsys):
    a = run(capsys, "scenario", "double-slit", "--which-slit")[1]
    b = run(capsys, "scenario", "double-slit", "--which-slit")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "partlogic", "entropy", str(SAMPLES / "halves.json")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["logical"] == 0.5
    proc = subprocess.run(
        [sys.executable, "-m", "partlogic", "entropy", "-"], input="{oops",
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 2 and proc.stderr
