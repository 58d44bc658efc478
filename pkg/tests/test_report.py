"""Tests for report records and the check runner."""
import json

from braidpy.core.report import (
    Check,
    CheckStatus,
    ReportRecord,
    SkipCheck,
    SuiteReport,
    first_failure,
    residual_witness,
    run_checks,
)
from braidpy.core.suq2 import ALPHA, GAMMA


def skipped():
    raise SkipCheck("window too small")


def broken():
    raise RuntimeError("boom")


def test_residual_witness():
    """Test the residual text of failing identities."""
    assert residual_witness(ALPHA, ALPHA) is None
    assert residual_witness(ALPHA, GAMMA) == f"residual: {ALPHA - GAMMA}"


def test_first_failure():
    """Test that the first failing item is reported with its label."""
    assert first_failure([1, 2, 3], lambda x: None) is None
    assert first_failure([1, 2, 3], lambda x: "odd" if x % 2 else None) == "1: odd"


def test_check_outcomes():
    """Test pass, fail, skipped and crashing checks."""
    checks = [
        Check("ok", "topic", lambda: None),
        Check("bad", "topic", lambda: residual_witness(ALPHA, GAMMA)),
        Check("skip", "topic", skipped),
        Check("crash", "topic", broken),
    ]
    records = run_checks(checks, "demo")
    assert [r.status for r in records] == [CheckStatus.PASS, CheckStatus.FAIL, CheckStatus.SKIPPED, CheckStatus.FAIL]
    assert records[1].witness.startswith("residual: ")
    assert records[2].witness == "window too small"
    assert records[3].witness == "RuntimeError: boom"
    assert all(r.suite == "demo" and r.wall_time is None for r in records)


def test_parallel_runner_keeps_order():
    """Test that worker threads do not reorder records."""
    checks = [Check(f"c{i}", "topic", lambda: None) for i in range(20)]
    records = run_checks(checks, "demo", jobs=4, timings=True)
    assert [r.check_id for r in records] == [f"c{i}" for i in range(20)]
    assert all(r.wall_time is not None for r in records)


def test_record_serialization():
    """Test the JSON fields of a record."""
    record = ReportRecord("sphere", "gamma-star", "sphere action: star", "pass")
    data = record.to_dict()
    assert set(data) == {"suite", "check_id", "source", "status", "witness", "wall_time"}
    assert json.loads(json.dumps(data))["status"] == "pass"
    assert record.passed and not record.failed


def test_suite_report_counts():
    """Test the summary counts of a suite."""
    records = run_checks([Check("a", "t", lambda: None), Check("b", "t", lambda: "x"), Check("c", "t", skipped)], "s")
    report = SuiteReport("s", records)
    assert (report.passed, report.failed, report.skipped) == (1, 1, 1)
    assert not report.ok
    assert report.has_failures()
    assert [r.check_id for r in report.get_failures()] == ["b"]
    assert report.summary() == {"suite": "s", "total": 3, "passed": 1, "failed": 1, "skipped": 1}
