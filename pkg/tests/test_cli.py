import json
import subprocess
import sys
from pathlib import Path

import pytest

from italcheck.cli import run

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def m0_file(tmp_path, m0):
    path = tmp_path / "m0.json"
    path.write_text(m0.to_json())
    return str(path)


def test_eval(m0_file, capsys):
    assert run(["eval", "--model", m0_file, "--time", "0", "--world", "x1", "D"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_eval_unknown_world(m0_file, capsys):
    assert run(["eval", "--model", m0_file, "--time", "0", "--world", "q", "D"]) == 2
    assert "unknown world" in capsys.readouterr().err


def test_parse_ok(capsys):
    assert run(["parse", "G(B[a,b] A[b,a] (X G D)) -> G D"]) == 0
    out = capsys.readouterr().out
    assert "Implies(Always(Believe(a,b,Assume(b,a,Next(Always(DiagAtom))))), Always(DiagAtom))" in out
    assert "rendered: G B[a,b] A[b,a] X G D -> G D" in out


def test_parse_error_exit_code(capsys):
    assert run(["parse", "G(B[a,b] A[b,a] (X G D)) ->"]) == 2
    err = capsys.readouterr().err
    assert "line 1, column 28" in err


def test_parse_json(capsys):
    assert run(["parse", "--json", "p & (q | r)"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d == {"ast": 'And(Prop("p"), Or(Prop("q"), Prop("r")))', "rendered": "p & (q | r)",
                 "roundtrip": True}


def test_check_valid_and_refuted(m0_file, capsys):
    assert run(["check", "--model", m0_file, "--valid", "G D"]) == 0
    assert run(["check", "--model", m0_file, "--valid", "--json", "Ua"]) == 1
    out = capsys.readouterr().out
    d = json.loads(out[out.index("{"):])
    assert d["verdict"] == "refuted" and d["witness"] == {"time": 0, "world": "y1"}
    assert set(d) == {"model", "formula", "verdict", "witness"}


def test_check_sat(m0_file, capsys):
    assert run(["check", "--model", m0_file, "--sat", "D"]) == 0
    assert '{"time": 0, "world": "x1"}' in capsys.readouterr().out
    assert run(["check", "--model", m0_file, "--sat", "Ua & Ub"]) == 1


def test_theorems(capsys):
    assert run(["theorems", "--enum", "a=2,b=2,prefix=0,loop=2,strict", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("4096 models")
    assert "theorem1: holds=512, vacuous=3584" in out
    assert "theorem2: holds=4096" in out
    assert "no violations" in out


def test_theorems_json(capsys):
    assert run(["theorems", "--json", "--jobs", "1", "--enum", "a=2,b=2,constant"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["models_total"] == 64 and d["violations"] == []


def test_complete_model(m0_file, capsys):
    assert run(["complete", "--model", m0_file, "--depth", "3"]) == 0
    assert "incomplete at depth 3" in capsys.readouterr().out


def test_complete_sweep(capsys):
    assert run(["complete", "--enum", "a=2,b=2", "--depth", "3", "--json", "--jobs", "1"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["models_total"], d["models_incomplete"], d["complete_models"]) == (64, 64, [])
    assert set(d) == {"spec", "depth", "models_total", "models_incomplete", "complete_models"}


def test_complete_sweep_depth0_flags_nothing(capsys):
    assert run(["complete", "--enum", "a=2,b=2", "--depth", "0", "--jobs", "1"]) == 0


def test_yablo(capsys):
    assert run(["yablo", "--finite", "3"]) == 0
    assert capsys.readouterr().out.startswith("FFT\n")
    assert run(["yablo", "--periodic", "2,2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["assignment"] is None
    assert run(["yablo", "--periodic", "2"]) == 2
    assert run(["yablo", "--finite", "99"]) == 2


def test_bk_demo_golden(capsys):
    assert run(["bk-demo"]) == 0
    first = capsys.readouterr().out
    assert run(["bk-demo"]) == 0
    assert capsys.readouterr().out == first
    assert first == (GOLDEN / "bk_demo.txt").read_text()
    assert "consistent answers: 0" in first


@pytest.mark.parametrize("argv", [
    ["nonsense"], ["eval", "--bogus"], ["check", "--model", "x.json", "D"],
    ["eval", "--model", "/does/not/exist.json", "--time", "0", "--world", "x", "D"],
    ["theorems", "--enum", "a=1,b=1"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_invalid_model_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"worlds_a": ["x"], "worlds_b": ["y"], "prefix_len": 0,
                                "loop_len": 1, "slices": [{"rel_ab": [], "rel_ba": [["y", "x"]]}]}))
    assert run(["eval", "--model", str(path), "--time", "0", "--world", "x", "D"]) == 2
    assert "not serial" in capsys.readouterr().err


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "italcheck.cli", "yablo", "--finite", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("FT")
