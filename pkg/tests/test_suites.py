"""Tests for suite selection, configuration and execution."""
import pytest

from braidpy.core.report import CheckStatus
from braidpy.core.scalar import S2, VARSIGMA
from braidpy.core.suites import SUITE_IDS, ConfigError, SuiteConfig, derived_constants, run


@pytest.mark.parametrize(
    "changes",
    [
        {"suites": ["bogus"]},
        {"suites": []},
        {"max_size": -1},
        {"q_samples": [1.2]},
        {"q_samples": [0]},
        {"q_samples": []},
        {"output_format": "xml"},
        {"jobs": 0},
        {"levels": 0},
    ],
)
def test_invalid_config(changes):
    """Test that invalid settings raise ConfigError."""
    config = SuiteConfig(**changes)
    with pytest.raises(ConfigError):
        config.validate()


def test_config_error_is_value_error():
    """Test that ConfigError can be handled as ValueError."""
    with pytest.raises(ValueError):
        SuiteConfig(suites=["bogus"]).validate()


def test_selected_order():
    """Test that suites run in registry order, each once."""
    config = SuiteConfig(suites=["rank", "coassoc", "rank"])
    assert config.selected() == ["coassoc", "rank"]
    assert SuiteConfig(suites=["all", "rank"]).selected() == list(SUITE_IDS)


def test_coassoc_smallest_size():
    """Test that max_size 0 checks the unit alone."""
    reports = run(SuiteConfig(suites=["coassoc"], max_size=0))
    assert len(reports) == 1
    assert reports[0].name == "coassoc"
    assert len(reports[0].records) == 1
    assert reports[0].records[0].status is CheckStatus.PASS


def test_oracle_suites_pass():
    """Test the product and coproduct tables against the engine."""
    reports = run(SuiteConfig(suites=["products", "coproducts"]))
    assert [r.name for r in reports] == ["products", "coproducts"]
    assert len(reports[0].records) == 81
    assert len(reports[1].records) == 9
    assert all(r.ok for r in reports)


def test_jobs_keep_order():
    """Test that worker threads do not reorder records."""
    serial = run(SuiteConfig(suites=["coassoc"], max_size=1))[0]
    threaded = run(SuiteConfig(suites=["coassoc"], max_size=1, jobs=3))[0]
    assert [r.check_id for r in serial.records] == [r.check_id for r in threaded.records]
    assert [r.status for r in serial.records] == [r.status for r in threaded.records]


def test_timings():
    """Test that wall times are recorded only on request."""
    plain = run(SuiteConfig(suites=["coassoc"], max_size=0))[0].records[0]
    timed = run(SuiteConfig(suites=["coassoc"], max_size=0, timings=True))[0].records[0]
    assert plain.wall_time is None
    assert timed.wall_time >= 0


def test_oracle_dir_errors(tmp_path):
    """Test that an empty oracle directory is reported as ValueError."""
    with pytest.raises(ValueError):
        run(SuiteConfig(suites=["products"], oracle_dir=str(tmp_path)))


def test_rank_suite_single_q():
    """Test the rank suite at one sample value."""
    report = run(SuiteConfig(suites=["rank"], q_samples=[0.3 + 0.4j]))[0]
    assert len(report.records) == 4
    assert report.ok


def test_numeric_suite_single_q():
    """Test the numeric cross-check at one sample value."""
    config = SuiteConfig(
        suites=["numeric-crosscheck"], max_size=1, q_samples=[0.5], lambda_samples=[1.0], rho_samples=[2.5]
    )
    report = run(config)[0]
    assert len(report.records) == 8
    assert not report.has_failures()


def test_derived_constants():
    """Test the constants printed by the report command."""
    constants = derived_constants()
    assert constants["quotient_rho"] == str(S2)
    assert constants["quotient_lambda"] == str(1 - VARSIGMA ** 2)
    assert len(constants["discrepancies"]) == 5
    assert "zeta_bar" in constants["exchange_orientation"]
