import json
import subprocess
import sys

import pytest

from catsl2 import verify
from catsl2.cli import main
from catsl2.morclass import MorClass
from catsl2.qcore import LaurentPoly
from catsl2.uqsl2 import WeightOperator


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_t_matrix_examples(capsys):
    code, out, _ = run(capsys, "t-matrix", "--N", "1", "--lambda", "1")
    assert code == 0
    d = json.loads(out)
    assert d["source_basis"] == [0] and d["target_basis"] == [1]
    assert d["matrix"] == [[[[0, 1]]]]
    code, out, _ = run(capsys, "t-matrix", "--N", "2", "--lambda", "0")
    op = WeightOperator.from_json(json.loads(out))
    assert op.entry() == LaurentPoly.monomial(2, -1)


def test_t_matrix_deterministic(capsys):
    outs = {run(capsys, "t-matrix", "--N", "6", "--lambda", "2")[1] for _ in range(3)}
    assert len(outs) == 1
    op = WeightOperator.from_json(json.loads(outs.pop()))
    assert json.loads(json.dumps(op.to_json())) == op.to_json()


@pytest.mark.parametrize("argv", [
    ["t-matrix", "--N", "2", "--lambda", "1"],
    ["t-matrix", "--N", "2", "--lambda", "4"],
    ["t-matrix", "--N", "2"],
    ["theta", "--N", "4", "--k", "3"],
    ["theta", "--N", "4"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "qcore", "--jobs", "0"],
    ["verify", "--suite", "qcore", "--max-n", "-1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_qcore_table(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "qcore", "--format", "table")
    assert code == 0
    assert out.startswith("suite=qcore seed=0")
    assert "2/2 passed" in out


def test_verify_homvanish(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "homvanish", "--max-n", "30")
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"] and rep["failed"] == 0
    sweeps = [r for r in rep["rows"] if r["key"][0] == "sweep"]
    assert all(r["detail"]["cond1_cases"] == 37688 for r in sweeps)
    assert all(r["anchor"] for r in rep["rows"])


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setitem(verify.CHECKS, "qcore_binomials", lambda max_n: (False, {"forced": True}))
    code, out, _ = run(capsys, "verify", "--suite", "qcore")
    assert code == 1
    rep = json.loads(out)
    assert rep["failed"] == 1
    assert rep["reproducers"] == [{"suite": "qcore", "check": "binomials", "params": {"max_n": 20}}]


def test_crashing_check_is_a_failure(monkeypatch):
    def boom(**kw):
        raise RuntimeError("kaboom")
    monkeypatch.setitem(verify.CHECKS, "qcore_telescoping", boom)
    rep = verify.run_suite("qcore")
    row = [r for r in rep["rows"] if r["key"] == ["telescoping"]][0]
    assert not row["passed"] and row["error"] == "RuntimeError: kaboom"


def test_verify_parallel_matches_serial(monkeypatch):
    b = verify.Bounds(N=6, max_n=12, backend="numpy")
    serial = verify.run_suite("uqsl2", b, jobs=1)
    monkeypatch.setenv("CATSL2_JOBS", "2")
    parallel = verify.run_suite("uqsl2", b)
    assert json.dumps(serial, sort_keys=True) == json.dumps(parallel, sort_keys=True)


def test_rows_sorted_numerically():
    rep = verify.run_suite("uqsl2", verify.Bounds(N=11))
    keys = [r["key"] for r in rep["rows"] if r["key"][0] == "module"]
    assert [k[1] for k in keys] == list(range(12))


def test_cases_cover_all_suites():
    suites = {c.suite for c in verify.cases_for("all", verify.Bounds())}
    assert suites == set(verify.SUITES)
    with pytest.raises(ValueError):
        verify.cases_for("nope", verify.Bounds())


def test_theta_examples(capsys):
    code, out, _ = run(capsys, "theta", "--N", "2", "--k", "1")
    rep = json.loads(out)
    assert code == 0 and rep["term_count"] == 2 and rep["euler_matches_t"]
    assert all(h["exact"] for h in rep["hw_complexes"])
    code, out, _ = run(capsys, "theta", "--N", "10", "--k", "3")
    assert json.loads(out)["term_count"] == 4
    code, out, _ = run(capsys, "theta", "--N", "5", "--k", "0")
    rep = json.loads(out)
    assert rep["term_count"] == 1
    c = MorClass.from_json(rep["terms"][0]["class"])
    assert c.term_dict == {(5, 0): LaurentPoly.const(1)}


def test_theta_table(capsys):
    code, out, _ = run(capsys, "theta", "--N", "4", "--k", "2", "--format", "table")
    assert code == 0
    assert "3 terms" in out and "(q^2) F^(2)E^(2)" in out


def test_console_script_module_entry():
    r = subprocess.run([sys.executable, "-m", "catsl2.cli", "t-matrix", "--N", "2", "--lambda", "0"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["matrix"] == [[[[2, -1]]]]
