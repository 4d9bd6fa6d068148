import json

import pytest

from nihocorr import cli
from nihocorr.cli import Check, ReportRecord, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_json(capsys):
    code, out, _ = run(capsys, "dist", "5", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert (obj["command"], obj["p"], obj["m"], obj["q"]) == ("dist", "5", "2", "25")
    assert {r["value"]: r["count"] for r in obj["rows"]} == {
        "-26": "216", "-1": "238", "24": "109", "49": "54", "74": "4", "99": "3"}
    assert obj["checks"] == []


def test_dist_csv(capsys):
    code, out, _ = run(capsys, "dist", "11", "1", "--format", "csv")
    assert code == 0
    assert out.split("\n")[0] == "value,count"
    assert "\r" not in out
    assert ReportRecord.rows_from_csv(out) == [(-12, 38), (-1, 46), (10, 26), (21, 8), (32, 1), (43, 1)]


def test_dist_verify(capsys):
    code, out, _ = run(capsys, "dist", "11", "1", "--verify", "--format", "json")
    assert code == 0
    checks = json.loads(out)["checks"]
    assert len(checks) == 6 and all(c["passed"] for c in checks)


def test_dist_exit_codes(capsys):
    assert run(capsys, "dist", "19", "1")[0] == 2
    assert run(capsys, "dist", "3", "2")[0] == 2
    assert run(capsys, "dist", "9", "1")[0] == 2
    assert run(capsys, "dist", "5", "0")[0] == 2
    assert run(capsys, "dist", "x", "1")[0] == 64
    assert run(capsys, "dist", "5")[0] == 64
    assert run(capsys, "dist", "5", "2", "--format", "xml")[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    assert run(capsys)[0] == 64
    code, out, err = run(capsys, "dist", "19", "1")
    assert out == "" and "5 divides" in err


def test_dist_mismatch_exit(capsys, monkeypatch):
    real = cli.niho.distribution_oracle_for

    def skewed(p, m, method):
        t = real(p, m, method)
        rows = list(t.rows)
        rows[0] = (rows[0][0], rows[0][1] + 1)
        return type(t)(tuple(rows), t.p, t.m)

    monkeypatch.setattr(cli.niho, "distribution_oracle_for", skewed)
    code, out, _ = run(capsys, "dist", "11", "1", "--verify")
    assert code == 3 and "FAIL" in out


@pytest.mark.parametrize("args,value", [
    (("lambda", "7", "3"), "-21"),
    (("b3", "11", "1"), "13"),
    (("n5", "5", "2"), "3"),
    (("n4", "7", "3"), "52"),
    (("aq", "17", "2"), "-382"),
    (("gamma2", "11", "1"), "5"),
    (("gamma5", "5", "2"), "168"),
    (("b5", "5", "2"), "78"),
])
def test_quantity(capsys, args, value):
    code, out, _ = run(capsys, "quantity", *args, "--verify")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == value
    assert all("PASS" in line for line in lines[1:])


def test_quantity_errors(capsys):
    assert run(capsys, "quantity", "lambda", "3", "1")[0] == 2
    assert run(capsys, "quantity", "n4", "19", "1")[0] == 2
    assert run(capsys, "quantity", "zeta", "7", "1")[0] == 64


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "13", "--quick")
    assert code == 0
    assert out.strip().split("\n")[-1] == "verify-all 13: PASS"
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify-all", "0")
    assert code == 0 and out == "verify-all 0: PASS\n"
    assert run(capsys, "verify-all", "1000")[0] == 2


def test_verify_all_reports_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli.niho, "b3_closed", lambda p, m: -1)
    code, out, _ = run(capsys, "verify-all", "7", "--quick")
    assert code == 3 and "b3=FAIL" in out


def test_deterministic_output(capsys):
    for fmt in ("json", "csv", "text"):
        first = run(capsys, "dist", "7", "1", "--verify", "--format", fmt)
        second = run(capsys, "dist", "7", "1", "--verify", "--format", fmt)
        assert first == second


def test_report_round_trip():
    rec = ReportRecord("dist", 7, 3, [(-344, 42970), (1371, 954)], {"n5": 954},
                       [Check("row -344", True, "oracle=42970"), Check("x", False)])
    assert ReportRecord.from_json(rec.to_json()) == rec
    assert ReportRecord.rows_from_csv(rec.to_csv()) == rec.rows
    big = ReportRecord("dist", 2, 100, [(2 ** 80, 3 ** 60)])
    assert ReportRecord.from_json(big.to_json()) == big
    assert '"1208925819614629174706176"' in big.to_json()


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "nihocorr", "quantity", "b3", "5", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "25\n"
