import json
import subprocess
import sys

import pytest

from rmotivic import cli, fixtures


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["conjugate", "T1"], "T0 X1 + T1"),
        (["mul", "T0", "T0"], "t X1 + r T0 X1 + r T1"),
        (["coproduct", "X1"], "X1 | 1 + 1 | X1"),
        (["normalize", "T0 T0 T0"], "t T0 X1 + r T0 T1 + t r X1^2 + r^2 T0 X1^2 + r^2 T1 X1"),
        (["product", "P3", "P1"], "P(1,1) + t Q0 Q1 P2"),
        (["pair", "T0", "Q0"], "1"),
        (["pair", "t T1 + X1", "Q1"], "t"),
    ],
)
def test_algebra_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_json_format(capsys):
    code, out, _ = run(capsys, "--format", "json", "mul", "T0", "T0")
    assert code == 0
    assert json.loads(out) == {"result": "t X1 + r T0 X1 + r T1"}


def test_table1_verify(capsys):
    code, out, _ = run(capsys, "table1-verify")
    assert code == 0
    assert out.count("PASS ") == 18
    assert out.strip().endswith("18/18 rows PASS")


def test_chi_check(capsys):
    code, out, _ = run(capsys, "--format", "json", "chi-check")
    data = json.loads(out)
    assert code == 0
    assert data["forced_sq2"] == [1] and data["forced_sq4"] == [[0, 1, 1]]


def test_dualize_fixture(capsys):
    code, out, _ = run(capsys, "dualize", "fixtures/smod2.json")
    assert code == 0
    assert "Sq1 xh10 = xh00" in out.splitlines()
    assert "Sq2 xh10 = r xh00" in out.splitlines()


def test_comodule_joker(capsys, tmp_path):
    target = tmp_path / "joker_coaction.json"
    code, out, _ = run(capsys, "comodule", "fixtures/joker.json", "-o", str(target))
    assert code == 0
    assert "psi(x21) = 1 | x21 + (t X1 + r T0 X1 + r T1 + r^2 X1^2) | x41" in out
    assert "psi(x10) = 1 | x10 + X1 | x31 + T1 | x41" in out
    code, out, _ = run(capsys, "dualize", str(target))
    assert "Sq4 xh41 = r^2 xh21" in out


def test_iso_identity(capsys):
    path = str(fixtures.path("joker"))
    code, out, _ = run(capsys, "iso", path, path)
    assert code == 0 and out.strip() == "isomorphic (identity)"


def test_iso_negative(capsys):
    code, out, _ = run(capsys, "iso", "smod2", "smodh")
    assert code == 1 and out.strip() == "not isomorphic"


def test_roundtrip(capsys):
    for name in fixtures.NAMES:
        code, out, _ = run(capsys, "roundtrip", name)
        assert code == 0 and "roundtrip PASS" in out


def test_catalog_module_and_shifted_dual(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(capsys, "a1", "1000001", "--coaction", "-o", str(a))
    code, _, _ = run(capsys, "dualize", str(a), "--shift", "6,2", "-o", str(b))
    assert code == 0
    run(capsys, "a1", "1000001", "-o", str(a))
    code, out, _ = run(capsys, "iso", str(b), str(a))
    assert code == 0 and out.startswith("isomorphic")


def test_census_self_dual(capsys):
    code, out, _ = run(capsys, "census", "--self-dual")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 18
    assert lines[-1] == "16 self-dual"


def test_census_realizations(capsys):
    code, out, _ = run(capsys, "census", "--realizations")
    assert out.strip() == "Y(2,1): 8  Y(h,1): 8"


def test_census_full_verify_sampled(capsys):
    code, out, _ = run(capsys, "census", "--self-dual", "--full-verify")
    assert code == 0
    assert out.strip().endswith("128/128 verified")


def test_census_output_is_stable(capsys):
    _, first, _ = run(capsys, "census")
    _, second, _ = run(capsys, "census")
    assert first == second
    assert len(first.strip().splitlines()) == 130


@pytest.mark.parametrize(
    "argv",
    [
        ["mul", "T0", "T0 +"],
        ["conjugate", "T0 (X1"],
        ["product", "Sq3"],
        ["dualize", "missing.json"],
        ["a1", "10101"],
        ["fixture", "nope"],
        ["dualize", "smod2", "--shift", "6"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_parse_error_reports_position(capsys):
    _, _, err = run(capsys, "mul", "T0 + Y1")
    assert "position 5" in err


def test_bad_module_names_element(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"basis": [{"name": "x00", "degree": [0, 0]}, {"name": "x10", "degree": [1, 0]}],
                               "action": {"Sq2": {"x00": [["1", "x10"]]}}}))
    code, _, err = run(capsys, "comodule", str(bad))
    assert code == 2 and "x00" in err


def test_degree_bound_env(tmp_path):
    env = {"RMOTIVIC_DEGREE_BOUND": "4", "PATH": ""}
    proc = subprocess.run(
        [sys.executable, "-m", "rmotivic.cli", "product", "P2", "P1"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 2
    assert "degree bound 4" in proc.stderr


def test_fixture_printing(capsys):
    code, out, _ = run(capsys, "fixture", "smod2")
    assert json.loads(out)["action"]["Sq2"] == {"x00": [["r", "x10"]]}
