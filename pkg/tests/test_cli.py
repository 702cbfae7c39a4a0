import json
import subprocess
import sys

import pytest

from ginalg.cli import run


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def quadrics_file(tmp_path):
    path = tmp_path / "V.txt"
    path.write_text(
        "# three quadrics\n"
        "s=4 d=2 order=revlex\n"
        "x1^2 - x2*x4\n"
        "x1*x2 - x3*x4\n"
        "x1*x3 - x4^2\n"
    )
    return str(path)


def test_in_subcommand(capsys, quadrics_file):
    code, out, _ = invoke(capsys, ["in", quadrics_file])
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "monomials": ["x1^2", "x1*x2", "x1*x3"],
        "dim": 3,
        "degree": 2,
        "order": "revlex",
    }


def test_gin_subcommand_schema_and_determinism(capsys, quadrics_file):
    code, out1, _ = invoke(capsys, ["gin", "--seed", "7", quadrics_file])
    assert code == 0
    payload = json.loads(out1)
    assert set(payload) == {"result", "trials", "agreements", "stable", "seeds"}
    assert payload["stable"] is True and payload["trials"] == 3
    code, out2, _ = invoke(capsys, ["gin", "--seed", "7", quadrics_file])
    assert out1 == out2  # byte-identical


def test_gin_ideal_subcommand(capsys, tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("s=3 order=revlex\nx1^2\n")
    code, out, _ = invoke(capsys, ["gin-ideal", "--dmax", "3", "--seed", "1", str(path)])
    assert code == 0
    payload = json.loads(out)
    assert payload["generators"] == ["x1^2"]
    assert payload["stable"] is True
    assert set(payload["per_degree"]) == {"2", "3"}


def test_restrict_subcommand(capsys, quadrics_file):
    code, out, _ = invoke(capsys, ["restrict", "--hyperplane", "x4", "--text", quadrics_file])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "s=3 d=2 order=revlex"
    assert lines[1:] == ["x1^2", "x1*x2", "x1*x3"]


def test_gcd_subcommand(capsys):
    code, out, _ = invoke(capsys, ["gcd", "--vars", "3", "x1^2*x2", "x1*x2^2"])
    assert code == 0
    assert json.loads(out) == {"gcd": "x1*x2", "degree": 2}


def test_factor_subcommand(capsys, tmp_path):
    path = tmp_path / "V.txt"
    path.write_text("s=3 d=2 order=revlex\nx1^2 + x1*x2\nx1*x3\n")
    code, out, _ = invoke(capsys, ["factor", str(path)])
    assert code == 0
    assert json.loads(out) == {"p": "x1", "m": 1}


def test_verify_not_applicable_exits_zero(capsys, quadrics_file):
    code, out, _ = invoke(capsys, ["verify", "--seed", "3", quadrics_file])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "not-applicable"
    assert payload["shape"]["m"] == 0


def test_verify_certificate_round_trip(capsys, tmp_path):
    code, out, _ = invoke(
        capsys,
        ["make-instance", "--vars", "4", "--r", "3", "--n", "1", "--m", "1", "--seed", "5",
         "--out", str(tmp_path / "inst.txt")],
    )
    assert code == 0
    made = json.loads(out)
    assert len(made["V"]) == 3 and made["p"]
    code, out, _ = invoke(capsys, ["verify", "--seed", "11", str(tmp_path / "inst.txt")])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "certificate"
    cert = payload["certificate"]
    assert set(cert) == {"p", "m", "r", "n", "W_n", "checked"}
    assert cert["checked"] is True and cert["m"] == 1


def test_probe_subcommand(capsys, tmp_path):
    code, _, _ = invoke(
        capsys,
        ["make-instance", "--vars", "4", "--r", "3", "--n", "1", "--m", "1", "--seed", "6",
         "--out", str(tmp_path / "inst.txt")],
    )
    assert code == 0
    code, out, _ = invoke(
        capsys, ["probe", "--expected-m", "1", "--seed", "1006", str(tmp_path / "inst.txt")]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["consistent"] is True
    assert all(s["factor_degree"] >= 1 for s in payload["samples"])


def test_hilbert_borel_colon_subcommands(capsys):
    j1 = "x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^4"
    code, out, _ = invoke(capsys, ["hilbert", "--vars", "4", "--dmax", "4", j1])
    assert code == 0 and json.loads(out)["values"] == [1, 4, 7, 8, 8]
    code, out, _ = invoke(capsys, ["borel", "--vars", "4", j1])
    assert code == 0 and json.loads(out) == {"borel_fixed": True}
    code, out, _ = invoke(capsys, ["colon", "--vars", "4", j1])
    assert code == 0
    payload = json.loads(out)
    assert payload["saturated"] is True
    code, out, _ = invoke(capsys, ["colon", "--vars", "4", "x1*x4"])
    assert json.loads(out) == {"colon": ["x1"], "saturated": False}


def test_enumerate_subcommand(capsys):
    code, out, _ = invoke(
        capsys, ["enumerate", "--vars", "4", "--dmax", "4", "--hf", "1,4,7,8,8"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2
    assert payload["candidates"][0] == ["x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^4"]
    assert payload["candidates"][1] == [
        "x1^2", "x1*x2", "x1*x3", "x2^3", "x2^2*x3", "x2*x3^2", "x3^4",
    ]


def test_ci_demo_text_output(capsys):
    code, out, _ = invoke(capsys, ["ci-demo", "--seed", "1"])
    assert code == 0
    assert out.strip().splitlines()[-1] == "gin = J1: PASS"


def test_ci_demo_json_output(capsys):
    code, out, _ = invoke(capsys, ["ci-demo", "--seed", "1", "--json"])
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_header_overrides_flags_with_warning(capsys, quadrics_file):
    code, out, err = invoke(capsys, ["in", "--vars", "3", quadrics_file])
    assert code == 0
    assert "header wins" in err
    assert json.loads(out)["dim"] == 3


def test_empty_body_gives_zero_subspace(capsys, tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("s=3 d=2 order=revlex\n# nothing else\n")
    code, out, _ = invoke(capsys, ["in", str(path)])
    assert code == 0
    assert json.loads(out) == {"monomials": [], "dim": 0, "degree": 2, "order": "revlex"}


def test_usage_errors_exit_three(capsys, tmp_path):
    code, _, err = invoke(capsys, ["no-such-command"])
    assert code == 3
    code, _, err = invoke(capsys, ["gcd", "--vars", "2", "x1 +", "x2"])
    assert code == 3 and "error" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("s=2 d=2 order=revlex\nx1 + x2^2\n")
    code, _, err = invoke(capsys, ["in", str(bad)])
    assert code == 3 and "bad.txt:2" in err


def test_mixed_degree_file_rejected(capsys, tmp_path):
    path = tmp_path / "mixed.txt"
    path.write_text("s=2 d=2 order=revlex\nx1^2\nx1*x2^2\n")
    code, _, err = invoke(capsys, ["in", str(path)])
    assert code == 3 and "degree" in err


def test_unstable_gin_exits_inconclusive(capsys, tmp_path):
    # bound 1 draws disagree at this seed; unanimity fails and the report says so
    path = tmp_path / "V.txt"
    path.write_text("s=3 d=2 order=revlex\nx1*x3 - x2^2\nx1^2 + x3^2\n")
    code, out, _ = invoke(capsys, ["gin", "--seed", "0", "--bound", "1", str(path)])
    assert code == 2
    payload = json.loads(out)
    assert payload["stable"] is False and payload["agreements"] < payload["trials"]


def test_randomized_subcommands_are_byte_deterministic(capsys, tmp_path):
    inst = str(tmp_path / "inst.txt")
    runs = [
        ["make-instance", "--vars", "4", "--r", "3", "--n", "1", "--m", "1", "--seed", "9",
         "--out", inst],
        ["verify", "--seed", "13", inst],
        ["probe", "--seed", "17", inst],
        ["ci-demo", "--seed", "2"],
    ]
    for argv in runs:
        code1, out1, _ = invoke(capsys, argv)
        code2, out2, _ = invoke(capsys, argv)
        assert (code1, out1) == (code2, out2), argv


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "ginalg", "gcd", "--vars", "2", "x1^2 - x2^2", "x1 + x2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout) == {"gcd": "x1 + x2", "degree": 1}
