import csv
import io
import json
import subprocess
import sys

import pytest

from lukasiewicz.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_critical_example():
    code, out, _ = call("critical", "--k", "0", "--l", "1")
    assert code == 0 and "a_c = 1.5" in out.splitlines()
    assert "z_c = 0.333333333333" in out


def test_enumerate_count_example():
    assert call("enumerate", "--k", "1", "--l", "1", "--n", "4", "--count")[:2] == (0, "2\n")


def test_enumerate_listing():
    code, out, _ = call("enumerate", "--k", "1", "--l", "1", "--n", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["steps"] for r in rows] == ["[1, -1, 1, -1]", "[1, 1, -1, -1]"]
    assert [r["contacts"] for r in rows] == ["2", "1"]


def test_bijection_verify_example():
    code, out, _ = call("bijection", "--which", "area", "--k", "0", "--l", "inf", "--n", "8", "--verify")
    assert (code, out) == (0, "pass\n")


def test_bijection_listing():
    code, out, _ = call("bijection", "--which", "motzkin", "--n", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and sorted(r["image"] for r in rows) == ["HH", "UD"]


def test_bijection_verify_json():
    code, out, _ = call("bijection", "--which", "rise", "--k", "1", "--l", "2", "--n", "6",
                        "--verify", "--format", "json")
    assert code == 0 and json.loads(out)[0]["pass"] == "true"


def test_series_matches_enumeration():
    _, g, _ = call("series", "--k", "1", "--l", "2", "--order", "6", "--format", "csv")
    _, e, _ = call("series", "--k", "1", "--l", "2", "--order", "6", "--format", "csv",
                   "--method", "enumerate")
    assert g == e
    _, g, _ = call("series", "--k", "0", "--l", "inf", "--order", "5", "--area", "--format", "csv")
    _, e, _ = call("series", "--k", "0", "--l", "inf", "--order", "5", "--area", "--format", "csv",
                   "--method", "enumerate")
    assert g == e and "a^2 + a*q" in g


def test_phase_csv_is_deterministic():
    args = ("phase", "--k", "1", "--l", "1", "--a-range", "1:5", "--points", "5")
    first, second = call(*args), call(*args)
    assert first == second
    lines = first[1].splitlines()
    assert lines[0] == "a,z_c,kappa" and lines[1] == "1,0.5,0.693147180560"


@pytest.mark.parametrize("argv", [
    ("ac-sweep", "--k", "1", "--ells", "1..3"),
    ("phase", "--k", "0", "--l", "1", "--a-range", "1:4", "--points", "4"),
    ("qseries", "--k", "1", "--l", "1", "--order", "4"),
    ("identity-check", "--order", "6"),
])
def test_json_and_csv_agree(argv):
    _, c, _ = call(*argv, "--format", "csv")
    _, j, _ = call(*argv, "--format", "json")
    assert list(csv.DictReader(io.StringIO(c))) == [{k: str(v) for k, v in r.items()} for r in json.loads(j)]


def test_ac_sweep_values():
    code, out, _ = call("ac-sweep", "--k", "1", "--ells", "1,2,inf")
    assert code == 0
    assert out.splitlines() == ["ell,a_c", "1,2", "2,2.39660825274", "inf,3"]


def test_crit_poly_and_discriminant():
    code, out, _ = call("crit-poly", "--k", "0", "--l", "1")
    assert code == 0 and "poly = 4*a^6 - 12*a^5 + 9*a^4" in out and "root_near_a_c = 1.5" in out
    code, out, _ = call("discriminant-check", "--k", "1", "--l", "2")
    assert code == 0 and "ratio = a^6" in out and "pass = true" in out


def test_identity_check_passes():
    code, out, _ = call("identity-check", "--order", "8")
    assert code == 0 and "false" not in out


def test_out_flag(tmp_path):
    target = tmp_path / "sweep.csv"
    code, out, _ = call("ac-sweep", "--k", "0", "--ells", "1,inf", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "ell,a_c\n1,1.5\ninf,2\n"


def test_verification_failure_exits_one(monkeypatch):
    import lukasiewicz.bijections as b
    real = b.verify_bijection

    def broken(kind, params, n, cap=None):
        rep = real(kind, params, n) if cap is None else real(kind, params, n, cap)
        rep.passed, rep.counterexample = False, "forced"
        return rep

    monkeypatch.setattr(b, "verify_bijection", broken)
    code, out, _ = call("bijection", "--which", "area", "--n", "3", "--verify")
    assert code == 1 and out.startswith("fail")


@pytest.mark.parametrize("argv, flag", [
    (("critical", "--k", "2", "--l", "1"), "--k"),
    (("critical", "--k", "x", "--l", "1"), "--k"),
    (("critical", "--k", "1", "--l", "minus"), "--l"),
    (("phase", "--k", "1", "--l", "1", "--a-range", "0:3"), "--a-range"),
    (("bijection", "--which", "rise", "--n", "3"), "--which rise"),
    (("bijection", "--which", "area", "--k", "1", "--n", "3"), "--k"),
    (("enumerate", "--k", "0", "--l", "inf", "--n", "9", "--count", "--cap", "10"), "ResourceLimit"),
    (("crit-poly", "--k", "1", "--l", "inf"), "InfiniteEll"),
    (("critical", "--k", "0", "--l", "0"), "DegenerateModel"),
])
def test_usage_errors(capsys, argv, flag):
    code, out, err = call(*argv)
    err += capsys.readouterr().err
    assert code == 2 and out == ""
    assert flag in err


def test_no_command_is_usage_error(capsys):
    assert call()[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "lukasiewicz", "critical", "--k", "1", "--l", "inf"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "a_c = 3" in res.stdout
