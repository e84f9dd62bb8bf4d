import io
import json
import math
import subprocess
import sys

import pytest

from hvrank2.cli import run_command

NZ = ["--p", "1,0", "--lambda", "2,3", "--alpha", "5", "--b0", "7"]
ZP = ["--p", "0,0", "--lambda", "2,3", "--beta", "1,-1", "--b0", "7", "--k", "4"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out=out, err=err)
    report = json.loads(out.getvalue()) if out.getvalue() else None
    return code, report, err.getvalue()


def strip_time(text: str) -> str:
    r = json.loads(text)
    r.pop("wall_time_ms")
    return json.dumps(r)


def test_report_shape():
    code, r, _ = run("invariance", "--q", "0,1", "--deg", "2")
    assert code == 0
    assert list(r) == ["command", "params", "cases_total", "failures", "result", "wall_time_ms"]
    assert r["result"]["basis"] == ["d1^2", "d1", "1"]


def test_verify_lie_counts_triples():
    code, r, _ = run("verify-lie", "--p", "1,2", "--window", "1")
    n = 2 * 9 + 2
    assert code == 0 and r["failures"] == []
    assert r["cases_total"] == math.comb(n + 2, 3)


def test_parse_error_exit_2():
    code, r, err = run("verify-lie", "--p", "1/0,2", "--window", "2")
    assert code == 2 and r is None
    assert "usage" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["verify-lie"],
        ["residuals", "--p", "1,0", "--lambda", "2,3"],
        ["residuals", "--p", "0,0", "--lambda", "2,3", "--alpha", "1", "--b0", "1", "--k", "1", "--beta", "0,0"],
        ["residuals", "--spec", "--p 1,0 --lambda 2,3 --alpha 5 --b0 7 --zzz 1"],
        ["invariance", "--deg", "2"],
        ["invariance", "--q", "1,1", "--deg", "-1"],
        ["iso", "--specA", "--p 1,0 --lambda 2,3 --alpha 5 --b0 7"],
        ["simplicity", *NZ],
    ],
)
def test_usage_errors(argv):
    code, r, err = run(*argv)
    assert code == 2 and r is None and err


def test_precondition_exit_3():
    code, r, _ = run("simplicity", *NZ, "--f", "1", "--bound", "2")
    assert code == 3
    assert r["result"]["error"] == "PreconditionError"
    code, r, _ = run("residuals", "--p", "1,0", "--lambda", "0,3", "--alpha", "5", "--b0", "7")
    assert code == 3


def test_simplicity_witness():
    code, r, _ = run("simplicity", "--p", "1,0", "--lambda", "1,1", "--alpha", "0", "--b0", "1",
                     "--f", "d1", "--bound", "1")
    assert code == 0 and r["result"]["witness"] == [0, -1]


def test_spec_string_equals_flags():
    a = run("recover", *NZ)[1]
    b = run("recover", "--spec", " ".join(NZ))[1]
    a.pop("wall_time_ms"), b.pop("wall_time_ms")
    assert a == b


def test_recover_zero_b0():
    code, r, _ = run("recover", "--p", "1,1", "--lambda", "2,3", "--alpha", "5", "--b0", "0")
    assert code == 0 and r["result"]["recovered"]["b0"] == "0"


def test_residuals_and_solve_h():
    code, r, _ = run("residuals", *ZP, "--window", "1")
    assert code == 0 and r["cases_total"] == r["result"]["hh"] + r["result"]["gh"] + r["result"]["gg"]
    code, r, _ = run("solve-h", "--p", "1,0", "--lambda", "1,1", "--alpha", "0", "--b0", "1",
                     "--window", "1", "--deg", "0")
    assert code == 0 and r["result"]["dimension"] == 1


def test_iso_separation():
    code, r, _ = run("iso", "--flavor", "Lt", "--specA", "--p 1,1 --lambda 2,3 --alpha 2 --b0 7",
                     "--specB", "--p 1,1 --lambda 2,3 --alpha 0 --b0 7", "--window", "1", "--deg", "1")
    assert code == 0
    assert r["result"] == {"isomorphic": False, "separating": {"x": "D1", "residual": "-2"}}


def test_verify_module_small():
    code, r, _ = run("verify-module", *ZP, "--window", "1", "--deg", "1")
    assert code == 0 and r["failures"] == []


def test_verify_realization_small():
    code, r, _ = run("verify-realization", "--p", "1/2,-1/3", "--window", "1")
    assert code == 0 and r["cases_total"] == 20 * 20 * 5


def test_failures_give_exit_1(monkeypatch):
    import hvrank2.cli as cli

    monkeypatch.setattr(cli, "jacobi_residual", lambda *a: "nonzero")
    code, r, _ = run("verify-lie", "--p", "1,2", "--window", "0")
    assert code == 1 and r["failures"]
    assert r["failures"][0]["actual"] == "nonzero"


def test_subprocess_deterministic():
    argv = [sys.executable, "-m", "hvrank2", "residuals", *NZ, "--window", "1"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert strip_time(a) == strip_time(b)
