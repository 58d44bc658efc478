"""Verification records and per-suite reports."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Callable, Dict, List, Optional

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class SkipCheck(Exception):
    """Raised inside a check that cannot run with the current settings."""


class ReportRecord:
    """Result of one check."""

    FIELDS = ("suite", "check_id", "source", "status", "witness", "wall_time")

    def __init__(
        self,
        suite: str,
        check_id: str,
        source: str,
        status: CheckStatus,
        witness: str = "",
        wall_time: Optional[float] = None,
    ):
        """
        Initialize a report record.

        Args:
            suite: Suite the check belongs to
            check_id: Identifier, unique within the suite
            source: Topic of the identity being checked
            status: Outcome
            witness: Residual or failing input, empty on success
            wall_time: Seconds spent, when timings are requested
        """
        self.suite = suite
        self.check_id = check_id
        self.source = source
        self.status = CheckStatus(status)
        self.witness = witness
        self.wall_time = wall_time

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "check_id": self.check_id,
            "source": self.source,
            "status": self.status.value,
            "witness": self.witness,
            "wall_time": self.wall_time,
        }

    def __repr__(self) -> str:
        return f"ReportRecord({self.suite}/{self.check_id}: {self.status.value})"


class Check:
    """A named identity check that has not run yet.

    ``run`` returns None when the identity holds and a witness string
    otherwise; it may raise SkipCheck.
    """

    def __init__(self, check_id: str, source: str, run: Callable[[], Optional[str]]):
        self.check_id = check_id
        self.source = source
        self.run = run

    def execute(self, suite: str = "", timings: bool = False) -> ReportRecord:
        """
        Run the check and record its outcome.

        Unexpected exceptions become failing records so that one broken
        check does not hide the others.
        """
        started = time.perf_counter()
        try:
            witness = self.run()
            status = CheckStatus.PASS if witness is None else CheckStatus.FAIL
        except SkipCheck as e:
            status, witness = CheckStatus.SKIPPED, str(e)
        except Exception as e:
            logger.exception("Check %s/%s raised", suite, self.check_id)
            status, witness = CheckStatus.FAIL, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - started
        logger.debug("%s/%s %s in %.3fs", suite, self.check_id, status.value, elapsed)
        return ReportRecord(
            suite,
            self.check_id,
            self.source,
            status,
            witness or "",
            round(elapsed, 6) if timings else None,
        )


def residual_witness(lhs, rhs) -> Optional[str]:
    """None when lhs == rhs, else the text of the residual lhs - rhs."""
    residual = lhs - rhs
    if not residual:
        return None
    return f"residual: {residual}"


def first_failure(items, check: Callable) -> Optional[str]:
    """Witness of the first item whose check fails, labelled with the item."""
    for item in items:
        witness = check(item)
        if witness is not None:
            return f"{item}: {witness}"
    return None


def run_checks(
    checks: List[Check], suite: str = "", jobs: int = 1, timings: bool = False
) -> List[ReportRecord]:
    """
    Execute checks, optionally on a thread pool; records keep the input order.

    Args:
        checks: Checks to run
        suite: Suite name stamped on the records
        jobs: Number of worker threads
        timings: Record wall times

    Returns:
        One record per check
    """
    if jobs <= 1 or len(checks) <= 1:
        return [check.execute(suite, timings) for check in checks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda check: check.execute(suite, timings), checks))


class SuiteReport:
    """Records of one suite with summary counts."""

    def __init__(self, name: str, records: List[ReportRecord]):
        """
        Initialize a suite report.

        Args:
            name: Suite name
            records: Records in execution order
        """
        self.name = name
        self.records = records
        self.passed = sum(1 for r in records if r.status is CheckStatus.PASS)
        self.failed = sum(1 for r in records if r.status is CheckStatus.FAIL)
        self.skipped = sum(1 for r in records if r.status is CheckStatus.SKIPPED)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def has_failures(self) -> bool:
        """Check if any record failed."""
        return self.failed > 0

    def get_failures(self) -> List[ReportRecord]:
        """Get the failing records."""
        return [r for r in self.records if r.failed]

    def summary(self) -> Dict:
        return {
            "suite": self.name,
            "total": len(self.records),
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
        }
