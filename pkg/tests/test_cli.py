"""Command-line interface: exit codes, output fragments, report files."""

import csv
import json

import pytest

from supercong.cli import main


def test_verify_small_range(capsys):
    assert main(["verify", "--primes", "5..30"]) == 0
    out = capsys.readouterr().out
    assert "checked" in out and " 0 fail" in out
    assert "E1.4  pass" in out


def test_verify_single_prime_and_family(capsys):
    assert main(["verify", "--primes", "13", "--families", "G1,G2"]) == 0
    out = capsys.readouterr().out
    assert "G1  pass  cases=1" in out
    assert "G2  pass  cases=1" in out


def test_verify_not_applicable_line(capsys):
    assert main(["verify", "--primes", "13", "--families", "A1"]) == 0
    assert "not applicable" in capsys.readouterr().out


def test_verify_rejects_low_range(capsys):
    assert main(["verify", "--families", "T1.6", "--primes", "4..10"]) == 2
    assert "must start at 5" in capsys.readouterr().err


def test_verify_rejects_unknown_family(capsys):
    assert main(["verify", "--primes", "5..10", "--families", "NOPE"]) == 2
    assert "unknown family" in capsys.readouterr().err


def test_verify_rejects_bad_prime_specs(capsys):
    assert main(["verify", "--primes", "15"]) == 2
    assert main(["verify", "--primes", "abc"]) == 2
    assert main(["verify", "--primes", "30..5"]) == 2
    assert main(["verify", "--primes", "5..99999"]) == 2
    err = capsys.readouterr().err
    assert "exceeds the cap" in err


def test_prime_cap_env_override(monkeypatch, capsys):
    monkeypatch.setenv("SUPERCONG_MAX_PRIME", "10")
    assert main(["verify", "--primes", "5..11", "--families", "B1"]) == 2
    monkeypatch.setenv("SUPERCONG_MAX_PRIME", "notanint")
    assert main(["verify", "--primes", "5..7", "--families", "B1"]) == 2
    monkeypatch.setenv("SUPERCONG_MAX_PRIME", "2200")
    assert main(["verify", "--primes", "2111", "--families", "B1"]) == 0
    capsys.readouterr()


def test_verify_sweep_cap_note(capsys):
    assert main(["verify", "--primes", "101..103", "--families", "T1.1"]) == 0
    out = capsys.readouterr().out
    assert "skipped=" in out


def test_verify_writes_json_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--primes", "5..20", "--families", "I8,B1", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["summary"]["fail"] == 0
    assert {c["family"] for c in data["cases"]} == {"I8", "B1"}
    assert "report written" in capsys.readouterr().out


def test_verify_writes_csv_report(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code = main(
        ["verify", "--primes", "5..20", "--families", "I8", "--out", str(out), "--format", "csv"]
    )
    assert code == 0
    with open(out, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][0] == "family"
    assert all(r[0] == "I8" for r in rows[1:])
    capsys.readouterr()


def test_verify_parallel_flag(capsys):
    assert main(["verify", "--primes", "5..20", "--parallelism", "3"]) == 0
    assert main(["verify", "--primes", "5..20", "--parallelism", "0"]) == 2
    capsys.readouterr()


def test_identity_runs_and_reports(capsys):
    assert main(["identity", "--ids", "I1,I4,Z1", "--max-n", "12"]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 3
    assert "I1" in out and "Z1" in out


def test_identity_vacuous_domain(capsys):
    assert main(["identity", "--ids", "I6", "--max-n", "0"]) == 0
    assert "vacuous" in capsys.readouterr().out


def test_identity_rejects_bad_inputs(capsys):
    assert main(["identity", "--ids", "I99", "--max-n", "5"]) == 2
    assert main(["identity", "--ids", "I1", "--max-n", "501"]) == 2
    assert main(["identity", "--ids", "I1", "--max-n", "-1"]) == 2
    capsys.readouterr()


def test_curve_output(capsys):
    assert main(["curve", "--p", "5", "--lambda", "2"]) == 0
    out = capsys.readouterr().out
    assert "count=8" in out and "a=2" in out
    assert "singular" not in out


def test_curve_weighted_and_singular(capsys):
    assert main(["curve", "--p", "7", "--lambda", "-1", "--d", "1"]) == 0
    out = capsys.readouterr().out
    assert "a^(1)=4" in out
    assert "match=True" in out
    assert main(["curve", "--p", "7", "--lambda", "8", "--d", "0"]) == 0
    assert "singular" in capsys.readouterr().out


def test_curve_rejects_bad_prime_or_weight(capsys):
    assert main(["curve", "--p", "9", "--lambda", "2"]) == 2
    assert main(["curve", "--p", "7", "--lambda", "2", "--d", "4"]) == 2
    capsys.readouterr()


def test_decompose_output(capsys):
    assert main(["decompose", "--p", "13"]) == 0
    assert "(-3)^2 + (2)^2" in capsys.readouterr().out
    assert main(["decompose", "--p", "7"]) == 0
    assert "no representation" in capsys.readouterr().out
    assert main(["decompose", "--p", "15"]) == 2
    capsys.readouterr()


def test_argparse_usage_error_is_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["curve", "--p", "5"])  # missing --lambda
    assert exc.value.code == 2
    capsys.readouterr()
