import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from retic.cli import pretty_name, run

DATA = Path(__file__).parent / "data"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_reticulate_n():
    code, text = call("reticulate", "n5x")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "L(n5x) ≅ L₂²"
    assert "  Δ: {Δ, phi}" in lines


def test_reticulate_json():
    code, text = call("reticulate", "lattice-p", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["lattice"]["isomorphic_to"] == ["L2+L2^2"]
    assert len(data["classes"]) == 5


def test_spectrum_text():
    code, text = call("spectrum", "lattice-p")
    assert code == 0
    assert text.splitlines()[:2] == ["Spec = {Δ, beta, alpha}", "Max = {beta, alpha}"]


def test_spectrum_json_of_u():
    code, text = call("spectrum", "u5", "--json")
    data = json.loads(text)
    assert data["spec"] == [] and data["hyperarchimedean"] is None


def test_commutator_table():
    code, text = call("commutators", "s3")
    assert code == 0
    assert text.splitlines() == [
        "     Δ  A3 ∇",
        "Δ  | Δ  Δ  Δ",
        "A3 | Δ  Δ  A3",
        "∇  | Δ  A3 A3",
    ]


def test_matrix_engine_gives_the_same_table():
    assert call("commutators", "c8", "--method", "matrix") == call("commutators", "c8")


def test_analyze_text():
    code, text = call("analyze", "u5")
    assert code == 0
    assert "L(u5) ≅ L₁" in text
    assert "join_distributive=no" in text


def test_analyze_json():
    code, text = call("analyze", "chain-4", "--json")
    data = json.loads(text)
    assert data["congruences"]["isomorphic_to"] == ["L2^3"]
    assert data["spectrum"]["hyperarchimedean"] is True


def test_verify_passes():
    code, text = call("verify", "chain-3")
    assert code == 0
    assert text.splitlines()[-1].startswith("ok:")


def test_verify_failure_exit_code():
    code, text = call("verify", "c8")
    assert code == 4
    assert text.splitlines()[-1] == "FAILED: 135 checks, 3 failed"


def test_verify_json():
    code, text = call("verify", "lattice-d", "--json")
    assert code == 0 and json.loads(text)["passed"]


def test_dot(tmp_path):
    code, text = call("dot", "lattice-p")
    assert code == 0
    assert text.count("digraph") == 2
    target = tmp_path / "out.dot"
    code, _ = call("reticulate", "n5x", "--dot-out", str(target))
    assert code == 0 and 'digraph "L(n5x)"' in target.read_text(encoding="utf-8")


def test_refusal_exit_code(capsys):
    code, _ = call("reticulate", str(DATA / "lopsided.alg"))
    assert code == 3
    assert "refused" in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("kind: algebra\nname: x\nelements: a\nop f/1:\n  b\n", encoding="utf-8")
    code, _ = call("analyze", str(bad))
    assert code == 2
    assert "line 5, col 3" in capsys.readouterr().err


def test_missing_source_exit_code():
    assert call("analyze", "nowhere")[0] == 1


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate", "c8"])
    assert info.value.code == 1
    assert call("analyze", "c8", "--max-lattice", "0")[0] == 1


def test_lattice_cap_exit_code(monkeypatch):
    # run() exports the cap; register the variable so it is restored afterwards
    monkeypatch.setenv("RETIC_MAX_LATTICE", "20")
    code, _ = call("verify", "chain-4", "--max-lattice", "2")
    assert code == 1
    assert call("verify", "chain-4", "--max-lattice", "8")[0] == 0


def test_pretty_names():
    assert pretty_name("L2^2") == "L₂²"
    assert pretty_name("L2+L2^2") == "L₂⊕L₂²"
    assert pretty_name("L1") == "L₁"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "retic", "reticulate", "lattice-e"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.splitlines()[0] == "L(lattice-e) ≅ L₃"


def test_version():
    out = subprocess.run([sys.executable, "-m", "retic", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "retic 0.1.0"
