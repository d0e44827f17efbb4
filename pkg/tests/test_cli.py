from __future__ import annotations

import json
from pathlib import Path

import pytest

from fanocalc.__version__ import __version__
from fanocalc.cli.main import build_parser, main

FAST = ["--max-weight", "40"]


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_no_command_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert main([]) == 2
    captured = capsys.readouterr()
    assert "enumerate" in captured.err
    assert captured.out == ""


def test_unknown_command_returns_usage_error() -> None:
    assert main(["bogus"]) == 2


def test_parser_defaults() -> None:
    args = build_parser().parse_args(["enumerate"])
    assert args.max_weight == 100
    assert args.workers == 1
    assert args.format == "json"


def test_enumerate_csv_to_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["enumerate", *FAST, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 96
    assert lines[0].startswith("gimel,a1,a2,a3,a4")


def test_enumerate_json_to_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "out" / "catalog.json"
    assert main(["enumerate", *FAST, "--workers", "2", "--out", str(out)]) == 0
    records = json.loads(out.read_text(encoding="utf-8"))
    assert len(records) == 95
    assert "✅ 95 families written" in capsys.readouterr().out


def test_enumerate_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["enumerate", *FAST, "--format", "text"]) == 0
    assert "ℷ=95  P(1,5,6,22,33)" in capsys.readouterr().out


def test_enumerate_rejects_small_bound(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["enumerate", "--max-weight", "10"]) == 2
    assert "❌" in capsys.readouterr().err


def test_family_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["family", "43", *FAST]) == 0
    out = capsys.readouterr().out
    assert "P(1,2,4,5,9)" in out
    assert "Quadratic(i=4, j=1)" in out


def test_family_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["family", "82", "--json", *FAST]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["weights"] == [1, 5, 12, 18]
    assert [p["sign"] for p in record["points"]] == ["Zero", "Zero"]


def test_family_out_of_range(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["family", "96", *FAST]) == 2
    assert "outside 1..95" in capsys.readouterr().err


def test_ledger_verify_writes_report(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    report_path = tmp_path / "report.json"
    assert main(["ledger", "verify", *FAST, "--report", str(report_path)]) == 0
    out = capsys.readouterr().out
    assert "C-ZERO: AnomalyMatch" in out
    assert "C-45: Mismatch count=52 stated=45" in out
    assert "C-45-POS: Match count=45 stated=45" in out
    assert "❌" not in out
    assert "Overall: AnomalyMatch" in out
    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["status"] == "AnomalyMatch"
    assert report["catalog_digest"].startswith("sha256:")


def test_lp_check_golden_with_certificate(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["lp", "check", "SYS-23", "--certificate"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "INFEASIBLE"
    assert "✅ certificate valid" in out


def test_lp_check_feasible_golden(capsys: pytest.CaptureFixture[str]) -> None:
    """A decided verdict that differs from the stated one is flagged, not failed."""
    assert main(["lp", "check", "SYS-12"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "FEASIBLE"
    assert "stated verdict: Infeasible" in out
    assert "mu = " in out


def test_lp_check_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    source = tmp_path / "box.txt"
    source.write_text("vars: x, y\nx + y < 1\nx >= 1\ny >= 0\n", encoding="utf-8")
    assert main(["lp", "check", str(source), "--certificate"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("INFEASIBLE")
    assert "certificate valid" in out


def test_lp_check_parse_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    source = tmp_path / "bad.txt"
    source.write_text("x <\n", encoding="utf-8")
    assert main(["lp", "check", str(source)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_lp_check_unknown_source(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["lp", "check", "SYS-99"]) == 2
    assert "neither a known system" in capsys.readouterr().err
