import json
import subprocess
import sys

import pytest

from supercm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize(capsys):
    assert run(capsys, "normalize", "V*U") == (0, "-U*V - Y - Z\n", "")


def test_coproduct_text(capsys):
    code, out, _ = run(capsys, "coproduct", "a3")
    assert code == 0
    assert out.strip() == "1 (x) a3 + b1 (x) c2 + 2*a2 (x) a2 + a3 (x) 1"


def test_coproduct_latex(capsys):
    _, out, _ = run(capsys, "--format", "latex", "coproduct", "a3")
    assert "\\ot" in out and "a_{3}" in out


def test_coproduct_json(capsys):
    _, out, _ = run(capsys, "coproduct", "a2", "--format", "json")
    data = json.loads(out)
    assert data["legs"] == ["F", "F"]
    assert {"coeff": "1/1", "legs": [{"even": [], "odd": []},
                                     {"even": [["a", 2, 1]], "odd": []}]} in data["terms"]


def test_json_element_schema(capsys):
    _, out, _ = run(capsys, "--format", "json", "antipode", "a3")
    data = json.loads(out)
    assert data["kind"] == "F"
    assert {"coeff": "2/1", "even": [["a", 2, 2]], "odd": []} in data["terms"]


def test_act_coact_hmul(capsys):
    assert run(capsys, "act", "W", "c3")[1].strip() == "-d3 + a3*d1"
    assert run(capsys, "coact", "W")[1].strip() == "Y (x) b1 + V (x) d1 + W (x) 1"
    assert run(capsys, "hmul", "a2", "X")[1].strip() == "a2 # X"


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "normalize", "a2 +")
    assert code == 2
    assert "position 4" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nope"])
    assert e.value.code == 2
    assert run(capsys, "verify", "--suite", "f", "--max-index", "1")[0] == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "classical")
    assert code == 0
    assert "RESULT: PASS" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from supercm import cli
    from supercm.report import Report

    def broken(name, args):
        rep = Report("broken")
        rep.add("always fails", False, counterexample=("lhs", "rhs", "lhs - rhs"))
        return [rep]

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "f")
    assert code == 1
    assert "[FAIL]" in out and "lhs - rhs" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "coproduct", "--max-index", "4")
    assert code == 0 and "[PASS]" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "supercm.cli", "--format", "json", "coproduct", "b3*c2"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first
