import csv
import io
import json
from fractions import Fraction

import pytest

from hsl.cli import CLIUsageError, main, parse_value
from hsl.identities import CheckReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_value():
    assert parse_value("3/4") == Fraction(3, 4)
    assert parse_value("-2") == Fraction(-2)
    assert parse_value("0.3") == 0.3
    assert parse_value("1+1i") == 1 + 1j
    assert parse_value("-0.5-2i") == -0.5 - 2j
    assert parse_value("2i") == 2j
    with pytest.raises(CLIUsageError):
        parse_value("abc")


def test_check_json_cor9(capsys):
    code, out, _ = run(capsys, "check", "--id", "cor9", "--p", "3", "--x", "0.3", "--t", "0.1", "--order", "40", "--format", "json")
    assert code == 0
    (line,) = out.splitlines()
    r = CheckReport.from_json(line)
    assert r.id == "cor9" and r.passed and r.elapsed_ms is None


def test_check_usage_errors(capsys):
    code, _, err = run(capsys, "check", "--id", "cor10", "--alpha", "0")
    assert code == 2 and "alpha" in err
    code, _, err = run(capsys, "check", "--id", "nosuch")
    assert code == 2 and "cor1" in err and "mehler" in err
    code, _, _ = run(capsys, "check", "--id", "cor1", "--x", "0.5", "--mode", "exact")
    assert code == 2
    code, _, _ = run(capsys, "check", "--id", "cor1", "--t", "0.3")
    assert code == 2
    code, _, _ = run(capsys, "check", "--id", "cor1", "--x", "bad")
    assert code == 2
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_check_allow_outside(capsys):
    with pytest.warns(RuntimeWarning):
        code, _, _ = run(capsys, "check", "--id", "cor1", "--t", "0.3", "--allow-outside")
    assert code == 0


def test_check_failure_exit_1(capsys):
    code, out, _ = run(capsys, "check", "--id", "cor1", "--order", "8", "--tail-factor", "0", "--abs-tol", "1e-30", "--rel-tol", "1e-30")
    assert code == 1 and out.startswith("FAIL")


def test_check_exact_rational(capsys):
    code, out, _ = run(capsys, "check", "--id", "cor9", "--p", "1/2", "--x", "1/3", "--mode", "exact", "--format", "json")
    assert code == 0
    r = CheckReport.from_json(out)
    assert r.mode == "exact" and r.lhs == r.rhs and isinstance(r.lhs[0], Fraction)


def test_check_both_modes(capsys):
    code, out, _ = run(capsys, "check", "--id", "cor6", "--mode", "both", "--format", "json")
    assert code == 0
    assert [json.loads(l)["mode"] for l in out.splitlines()] == ["numeric", "exact"]


def test_check_complex_alpha(capsys):
    code, out, _ = run(capsys, "check", "--id", "cor10", "--alpha", "1+1i", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["params"]["alpha"] == {"re": 1.0, "im": 1.0}
    assert set(d["lhs"]) == {"re", "im"}


def test_check_timing_flag(capsys):
    _, out, _ = run(capsys, "check", "--id", "landen", "--format", "json", "--timing")
    assert json.loads(out)["elapsed_ms"] is not None


def test_suite_csv(capsys):
    code, out, _ = run(capsys, "suite", "--seed", "1", "--trials", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) > 100 and all(r["passed"] == "true" for r in rows)
    assert list(rows[0]) == [
        "id", "mode", "params", "order", "lhs", "rhs", "residual_abs", "residual_rel",
        "tail_estimate", "passed", "elapsed_ms",
    ]


def test_suite_json_deterministic(capsys):
    argv = ("suite", "--filter", "cor*", "--seed", "4", "--trials", "2", "--format", "json")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--workers", "3")
    assert a == b and a


def test_suite_text_summary(capsys):
    code, out, _ = run(capsys, "suite", "--filter", "genfunc*")
    assert code == 0
    assert out.splitlines()[-1] == "summary: 3 checks, 3 passed, 0 failed"


def test_suite_empty_filter(capsys):
    code, out, _ = run(capsys, "suite", "--filter", "nonexistent", "--format", "json")
    assert code == 0 and out == ""


def test_output_file_and_env(capsys, tmp_path, monkeypatch):
    target = tmp_path / "r.json"
    run(capsys, "check", "--id", "landen", "--format", "json", "--output", str(target))
    assert CheckReport.from_json(target.read_text()).passed
    monkeypatch.setenv("HSL_OUT", str(tmp_path / "out"))
    code, out, _ = run(capsys, "suite", "--filter", "landen", "--format", "json")
    assert code == 0 and out == ""
    (written,) = (tmp_path / "out").iterdir()
    assert written.suffix == ".jsonl"


def test_series(capsys):
    code, out, _ = run(capsys, "series", "neg-log1m", "--order", "4", "--binomial")
    assert code == 0
    assert [l.split("\t")[1] for l in out.splitlines()] == ["0", "-1", "-3/2", "-11/6", "-25/12"]
    _, out, _ = run(capsys, "series", "geometric", "--order", "3", "--euler", "1,-1")
    assert [l.split("\t")[1] for l in out.splitlines()] == ["1", "0", "0", "0"]
    code, _, _ = run(capsys, "series", "nope")
    assert code == 2


def test_table(capsys):
    _, out, _ = run(capsys, "table", "harmonic", "--n", "3")
    assert out.split() == ["0", "0", "1", "1", "2", "3/2", "3", "11/6"]
    _, out, _ = run(capsys, "table", "stirling", "--m", "4")
    assert [l.split("\t")[1] for l in out.splitlines()] == ["1", "7", "6", "1"]
    _, out, _ = run(capsys, "table", "hermite", "--n", "3")
    assert out.splitlines()[-1].split("\t")[1] == "0 -12 0 8"
    _, out, _ = run(capsys, "table", "laguerre", "--n", "2", "--z", "1/2")
    assert out.splitlines()[-1] == "2\t1/8"
