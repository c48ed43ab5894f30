import io
import json
import subprocess
import sys


from tptri.certify import CriterionResult, TPReport
from tptri.cli import RunConfig, main, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    import contextlib
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            status = main(list(argv))
        except SystemExit as exc:
            status = exc.code
    return status, out.getvalue(), err.getvalue()


def test_gen_plain_matches_printed_triangle():
    status, out, _ = call("gen", "aigner-catalan", "--order", "4", "--format", "plain")
    assert status == 0
    rows = [[int(x) for x in line.split()] for line in out.splitlines()]
    assert rows == [[1], [1, 1], [2, 3, 1], [5, 9, 5, 1], [14, 28, 20, 7, 1]]


def test_gen_csv_is_ragged():
    status, out, _ = call("gen", "eulerian", "--order", "4", "--format", "csv")
    assert out == "1\n1,1\n1,4,1\n1,11,11,1\n"


def test_gen_q_triangle():
    status, out, _ = call("gen", "q-catalan", "--order", "2", "--format", "json")
    data = json.loads(out)
    # a(2,0) = s_0 a(1,0) + t_1 a(1,1) = 1 + q;  a(2,1) = r_1 a(1,0) + s_1 a(1,1) = 2 + q
    assert data["rows"][2] == ["1 + q", "2 + q", "1"]


def test_conjecture_narayana():
    status, out, _ = call("conjecture", "narayana", "--order", "8")
    assert status == 0
    assert out.startswith("TP verified up to order 8 (12869 minors evaluated)")
    assert "not a proof" in out


def test_check_criteria_exit_codes():
    assert call("check-criteria", "bell", "--which", "thm-2.9", "--order", "12")[0] == 0
    status, out, _ = call("check-criteria", "bell", "--which", "cor-2.5", "--order", "3")
    assert status == 1 and "fails at index 1" in out
    status, _, err = call("check-criteria", "bell", "--which", "nope", "--order", "3")
    assert status == 2 and "unknown criterion" in err


def test_check_tp_refutation_prints_witness(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("r = 2\ns = 1\nt = 2\n")
    status, out, _ = call("check-tp", str(path), "--order", "3")
    assert status == 1 and "refuted" in out and "minor rows" in out


def test_json_reports_roundtrip():
    for argv in (["check-tp", "bell", "--order", "5", "--format", "json"],
                 ["check-tp", "bell", "--order", "5", "-r", "2", "--format", "json"],
                 ["conjecture", "eulerian", "--order", "6", "--format", "json"]):
        status, out, _ = call(*argv)
        data = json.loads(out)
        report = TPReport.from_dict(data["report"])
        assert report.to_dict() == data["report"]
        assert (status == 0) == report.verified


def test_json_refutation_roundtrip(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("r = 2\ns = 1\nt = 2\n")
    status, out, _ = call("check-tp", str(path), "--order", "3", "--format", "json")
    report = TPReport.from_dict(json.loads(out)["report"])
    assert status == 1 and not report.verified and report.witness.value < 0


def test_criterion_json_roundtrip():
    status, out, _ = call("check-criteria", "bell", "--which", "cor-2.5", "--order", "3", "--format", "json")
    data = json.loads(out)
    assert CriterionResult.from_dict(data["result"]).to_dict() == data["result"]
    assert status == 1


def test_check_qtp_and_q_criteria():
    assert call("check-qtp", "q-catalan", "--order", "4")[0] == 0
    assert call("check-qtp", "pascal", "--order", "4")[0] == 0
    assert call("check-criteria", "q-shapiro", "--which", "iii", "--order", "5")[0] == 0


def test_cap_and_usage_errors():
    status, _, err = call("check-tp", "pascal", "--order", "20")
    assert status == 2 and "safety cap" in err
    assert call("check-tp", "pascal", "--order", "20", "-r", "2")[0] == 0
    assert call("gen", "no-such", "--order", "2")[0] == 2
    assert call("gen", "pascal")[0] == 2
    assert call("check-tp", "pascal", "--order", "3", "-r", "0")[0] == 2
    assert call("factorization", "eulerian", "--order", "3")[0] == 2
    assert call("check-tp", "q-catalan", "--order", "3")[0] == 2


def test_factorization_and_catalan_like():
    assert call("factorization", "bell", "--order", "6")[0] == 0
    status, out, _ = call("catalan-like", "bell", "--order", "6")
    assert out.split() == ["1", "1", "2", "5", "15", "52", "203"]


def test_run_directly():
    out, err = io.StringIO(), io.StringIO()
    assert run(RunConfig("check-tp", "stirling2", 5), out, err) == 0
    assert run(RunConfig("check-tp", "stirling2", 30, max_order=40, tp_order=2), out, err) == 0


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tptri.cli", "gen", "bell", "--order", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.split() == ["1", "1", "1", "2", "3", "1"]
