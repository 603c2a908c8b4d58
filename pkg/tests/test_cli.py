"""Command-line surface: subcommands, exit codes, determinism, --json."""

import json

import pytest

from awpa.cli import main
from awpa.frobenius import dual_numbers_algebra, clifford_algebra


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_algebra_verify_builtin(capsys):
    code, out, _ = run(capsys, "algebra", "verify", "clifford")
    assert code == 0
    assert "PASS" in out


def test_mul_golden(capsys):
    code, out, _ = run(capsys, "mul", "--algebra", "trivial", "--n", "2", "s[2,1]", "x1")
    assert code == 0
    assert out.strip() == "x2*s[2,1] - 1"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--algebra", "clifford", "--n", "2", "b(c,1)*x1")
    assert code == 0
    assert out.strip() == "-x1*b(c,1)"


def test_grdim(capsys):
    code, out, _ = run(
        capsys, "grdim", "--algebra", "dual_numbers", "--n", "1", "--cutoff", "6"
    )
    assert code == 0
    assert "PASS" in out


def test_dual_basis_and_nakayama(capsys):
    code, out, _ = run(capsys, "dual-basis", "--algebra", "dual_numbers")
    assert code == 0
    assert "1^vee" in out
    code, out, _ = run(capsys, "nakayama", "--algebra", "clifford")
    assert code == 0
    assert "psi(c) = (-1)*c" in out


def test_center(capsys):
    code, out, _ = run(
        capsys, "center", "--algebra", "clifford", "--n", "2", "--degree", "2"
    )
    assert code == 0
    assert "x1^2 + x2^2" in out


def test_jm(capsys):
    code, out, _ = run(capsys, "jm", "--algebra", "trivial", "--n", "3", "--k", "3")
    assert code == 0
    assert out.strip() == "s[1,3,2] + s[3,2,1]"


def test_suite_deterministic(capsys):
    args = ["suite", "--algebra", "clifford", "--n", "2", "--seed", "7",
            "--instances", "46"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "PASS" in out1


def test_suite_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "--json", "mul", "--algebra", "clifford", "--n", "2", "s[2,1]", "x1"
    )
    assert code == 0
    payload = json.loads(out)
    # the element string round-trips through the parser
    from awpa.engine import AwpaAlgebra
    from awpa.textio import element_str, parse_element

    ctx = AwpaAlgebra(clifford_algebra(), 2)
    elem = parse_element(ctx, payload["result"])
    assert element_str(elem) == payload["result"]


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mul", "--algebra", "trivial", "--n", "2"])  # missing operands
    assert exc.value.code == 2


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mul", "--algebra", "trivial", "--n", "2", "--weird", "x1", "x1"])
    assert exc.value.code == 2


def test_math_failure_exit_1(capsys, tmp_path):
    # a parse failure of a mathematical expression reports and exits 1
    code, out, _ = run(capsys, "nf", "--algebra", "trivial", "--n", "2", "x9")
    assert code == 1
    assert "FAIL" in out


def test_missing_algebra_exit_1(capsys):
    code, out, _ = run(capsys, "algebra", "verify", "/nonexistent/path.json")
    assert code == 1


def test_builtin_file_collision_warns(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    bad = tmp_path / "clifford"
    bad.write_text("{}")
    code, out, err = run(capsys, "algebra", "verify", "clifford")
    assert code == 0
    assert "both a builtin and a file" in err


def test_cyclotomic_commands(capsys, tmp_path):
    F = dual_numbers_algebra()
    data = F.to_json_dict()
    data["cyclotomic"] = {"e": [1], "c": [["z"]]}
    path = tmp_path / "dual_cyclo.json"
    path.write_text(json.dumps(data))

    code, out, _ = run(capsys, "cyclotomic", "gram", "--params", str(path), "--n", "1")
    assert code == 0 and "invertible: True" in out

    code, out, _ = run(
        capsys, "cyclotomic", "nakayama", "--params", str(path), "--n", "1",
        "--seed", "3", "--pairs", "25"
    )
    assert code == 0 and "PASS" in out and "symmetric (theta | level): True" in out

    code, out, _ = run(capsys, "cyclotomic", "basis", "--params", str(path), "--n", "2")
    assert code == 0 and "PASS" in out


def test_algebra_file_roundtrip_via_cli(capsys, tmp_path):
    F = dual_numbers_algebra()
    path = tmp_path / "dual.json"
    F.dump(path)
    code, out, _ = run(capsys, "algebra", "verify", str(path))
    assert code == 0
