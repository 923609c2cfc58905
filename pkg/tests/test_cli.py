import json
import subprocess
import sys

import pytest

from boundquiver.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "--json", "info")
    assert code == 0
    d = json.loads(out)
    assert d["dimension"] == 7 and d["field"] == "GF(3)"


def test_eval_and_field_override(capsys):
    code, out, _ = run(capsys, "--field", "5", "--json", "eval", "quot(x + z)")
    d = json.loads(out)
    assert code == 0 and d["dims"] == [2, 2]
    code, out, _ = run(capsys, "--field", "5", "--json", "info")
    assert json.loads(out)["field"] == "GF(5)"


def test_syzygy_tau_transpose(capsys):
    assert json.loads(run(capsys, "--json", "syzygy", "quot(x + z)", "2")[1])["dims"] == [1, 0]
    assert json.loads(run(capsys, "--json", "tau", "S(1)")[1])["dims"] == [2, 2]
    assert json.loads(run(capsys, "--json", "transpose", "S(1)")[1])["dims"] == [2, 2]


def test_ext(capsys):
    code, out, _ = run(capsys, "--json", "ext", "socquot(P(2))", "quot(x + z)")
    d = json.loads(out)
    assert code == 0 and d["dim"] == 1
    assert d["extensions"][0]["middle"]["dims"] == [3, 3] and not d["extensions"][0]["split"]


def test_decompose(capsys):
    code, out, _ = run(capsys, "--json", "decompose", "sum(S(1), S(1), P(2))")
    d = json.loads(out)
    assert code == 0
    assert [(s["dims"], s["multiplicity"]) for s in d["summands"]] == [([1, 0], 2), ([1, 2], 1)]


def test_predicates_exit_codes(capsys):
    assert run(capsys, "is-nth-syzygy", "pquot(1, x^2)", "2")[0] == 1
    assert run(capsys, "is-nth-syzygy", "rad(P(2))", "2")[0] == 0
    assert run(capsys, "in-tau-omega", "quot(x + y + z)", "2")[0] == 1
    code, out, _ = run(capsys, "--json", "in-tau-omega", "quot(x + z)", "2")
    assert code == 0 and json.loads(out)["result"] is True


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_verify_counterexample(capsys, p):
    code, out, _ = run(capsys, "--field", str(p), "verify-counterexample")
    assert code == 0
    assert out.strip().endswith("verdict: counterexample confirmed")


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "eval", "P(1")
    assert code == 2 and err.startswith("error: 1:4:")
    bad = tmp_path / "bad.alg"
    bad.write_text("vertices 1\narrow a : 1 -> 1\nrelation a*q\n")
    code, _, err = run(capsys, "--algebra", str(bad), "info")
    assert code == 2 and "3:12" in err
    assert run(capsys, "--algebra", str(tmp_path / "missing.alg"), "info")[0] == 2
    assert run(capsys, "syzygy", "S(1)", "0")[0] == 2
    assert run(capsys, "--field", "4", "info")[0] == 2


def test_algebra_file_and_seed_env(capsys, tmp_path, monkeypatch):
    f = tmp_path / "loop.alg"
    f.write_text("vertices 1\narrow a : 1 -> 1\nrelation a^2\nfield GF(2)\n")
    monkeypatch.setenv("BOUNDQUIVER_SEED", "7")
    code, out, _ = run(capsys, "--algebra", str(f), "--json", "ext", "S(1)", "S(1)")
    assert code == 0 and json.loads(out)["dim"] == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "boundquiver", "info"], capture_output=True, text=True)
    assert r.returncode == 0 and "vertices 2" in r.stdout
