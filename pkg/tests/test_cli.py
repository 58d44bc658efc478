"""Tests for the command-line interface."""
import json

import pytest
from click.testing import CliRunner

from braidpy import __version__
from braidpy.cli.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    """Test the version option."""
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_verify_text(runner):
    """Test a passing suite in text form."""
    result = runner.invoke(cli, ["verify", "coassoc", "--max-size", "0"])
    assert result.exit_code == 0
    assert "Suite coassoc" in result.output
    assert "Total: 1 passed, 0 failed, 0 skipped" in result.output


def test_verify_json(runner):
    """Test the JSON lines report and its summary line."""
    args = ["verify", "coassoc", "--max-size", "1", "--format", "json"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.output == second.output

    lines = [json.loads(line) for line in first.output.splitlines() if line]
    records, summary = lines[:-1], lines[-1]["summary"]
    assert len(records) == 5
    assert all(r["status"] == "pass" and r["suite"] == "coassoc" for r in records)
    assert summary["total"] == 5
    assert summary["failed"] == 0
    assert summary["suites"][0]["suite"] == "coassoc"


def test_verify_output_file(runner, tmp_path):
    """Test saving the report to a file."""
    path = tmp_path / "report.jsonl"
    result = runner.invoke(cli, ["verify", "coassoc", "--max-size", "0", "--format", "json", "-o", str(path)])
    assert result.exit_code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[-1])["summary"]["passed"] == 1


def test_verify_text_file_has_no_colour(runner, tmp_path):
    """Test that saved text reports carry no ANSI codes."""
    path = tmp_path / "report.txt"
    result = runner.invoke(cli, ["verify", "coassoc", "--max-size", "0", "-o", str(path)])
    assert result.exit_code == 0
    assert "Report saved" in result.output
    assert "\x1b[" not in path.read_text()


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "bogus"],
        ["verify", "coassoc", "--q", "abc"],
        ["verify", "coassoc", "--q", "1.5"],
        ["verify", "coassoc", "--max-size", "-1"],
        ["verify", "coassoc", "--jobs", "0"],
        ["verify"],
    ],
)
def test_verify_usage_errors(runner, args):
    """Test that bad arguments exit with status 2."""
    result = runner.invoke(cli, args)
    assert result.exit_code == 2


def test_verify_oracle_dir_env(runner, tmp_path, monkeypatch):
    """Test that an empty oracle directory from the environment is a usage error."""
    monkeypatch.setenv("BRAIDPY_ORACLE_DIR", str(tmp_path))
    result = runner.invoke(cli, ["verify", "products"])
    assert result.exit_code == 2
    assert "not found" in result.output


def test_check_rank(runner):
    """Test the range rank at one sample value."""
    result = runner.invoke(cli, ["check-rank", "--q", "0.3+0.4i"])
    assert result.exit_code == 0
    assert "q=0.3+0.4i: rank 9" in result.output


def test_check_rank_json(runner):
    """Test the JSON form of check-rank."""
    result = runner.invoke(cli, ["check-rank", "--q", "0.5", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["q"] == "0.5"
    assert data["rank"] == 9
    assert len(data["singular_values"]) == 9


def test_check_rank_errors(runner):
    """Test a window that is too small and q outside the disc."""
    assert runner.invoke(cli, ["check-rank", "--levels", "3", "--window", "2"]).exit_code == 2
    assert runner.invoke(cli, ["check-rank", "--q", "1.5"]).exit_code == 2


def test_report(runner):
    """Test the derived constants in text and JSON form."""
    result = runner.invoke(cli, ["report"])
    assert result.exit_code == 0
    assert "rho_q" in result.output
    assert "Discrepancies" in result.output

    result = runner.invoke(cli, ["report", "--format", "json"])
    assert result.exit_code == 0
    constants = json.loads(result.output)
    assert set(constants) >= {"quotient_rho", "quotient_lambda", "rho_prime", "discrepancies"}
