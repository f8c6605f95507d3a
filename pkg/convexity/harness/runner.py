"""
Check runner.

run_check executes one catalog entry; run_suite fans a list of ids out to
a process pool and returns reports in catalog order.
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

import structlog
from jinja2 import Environment, StrictUndefined

from convexity.harness.catalog import get_entry
from convexity.harness.models import (
    CheckContext,
    CheckStatus,
    Counterexample,
    SuiteReport,
    TheoremCheck,
    TheoremReport,
)
from convexity.shared.config import get_settings
from convexity.shared.contracts import REPORT_SCHEMA, validate_document
from convexity.shared.exceptions import (
    BudgetExceededError,
    EmptyInstanceRangeError,
    ReductionCounterexampleError,
)
from convexity.shared.logging_setup import configure_logging
from convexity.solvers.models import SearchBudget

log = structlog.get_logger()

TEMPLATE_DIR = Path(__file__).parent / "templates"
SUMMARY_TEMPLATE = "suite_summary.txt"


def run_check(check: TheoremCheck) -> TheoremReport:
    """
    Run one check.

    A budget overrun makes the report inconclusive, never passed.

    Raises:
        UnknownCheckError: check.id is not in the catalog
        EmptyInstanceRangeError: the check produced no instances
    """
    entry = get_entry(check.id)
    ctx = CheckContext(
        check_id=check.id,
        seed=check.seed,
        max_order=check.max_order,
        budget=check.budget,
    )
    log.info("check_started", check_id=check.id, seed=check.seed, max_order=check.max_order)
    start = time.perf_counter()
    counterexample = None
    try:
        counterexample = entry.run(ctx)
        status = CheckStatus.PASSED if counterexample is None else CheckStatus.FAILED
    except BudgetExceededError as e:
        status = CheckStatus.INCONCLUSIVE
        ctx.details["budget"] = {
            "operation": e.operation,
            "limit": e.limit,
            "lower_bound": e.lower_bound,
            "upper_bound": e.upper_bound,
        }
    except ReductionCounterexampleError as e:
        status = CheckStatus.FAILED
        counterexample = Counterexample(note=e.message, values=e.artifact)
    wallclock = time.perf_counter() - start

    if status is CheckStatus.PASSED and ctx.instances == 0:
        raise EmptyInstanceRangeError(check.id, check.max_order)

    if status is CheckStatus.FAILED:
        log.warning("check_failed", check_id=check.id, note=counterexample.note)
    elif status is CheckStatus.INCONCLUSIVE:
        log.warning("check_inconclusive", check_id=check.id, **ctx.details["budget"])
    else:
        log.info("check_passed", check_id=check.id, instances=ctx.instances)

    return TheoremReport(
        id=check.id,
        status=status,
        passed=status is CheckStatus.PASSED,
        instances_run=ctx.instances,
        counterexample=counterexample,
        wallclock=round(wallclock, 3),
        details=ctx.details,
    )


def run_suite(
    ids: list[str],
    *,
    seed: int,
    max_order: int,
    parallelism: int = 1,
    budget: SearchBudget | None = None,
) -> SuiteReport:
    """
    Run checks and collect their reports in the order of ids.

    Reports do not depend on parallelism; each check draws only from its
    own seed-derived streams.
    """
    for check_id in ids:
        get_entry(check_id)
    budget = budget or SearchBudget.from_settings()
    checks = [TheoremCheck(id=i, seed=seed, max_order=max_order, budget=budget) for i in ids]
    log.info("suite_started", checks=len(checks), seed=seed, parallelism=parallelism)

    if parallelism > 1 and len(checks) > 1:
        settings = get_settings()
        with ProcessPoolExecutor(
            max_workers=min(parallelism, len(checks)),
            initializer=configure_logging,
            initargs=(settings,),
        ) as pool:
            reports = list(pool.map(run_check, checks))
    else:
        reports = [run_check(check) for check in checks]

    suite = SuiteReport(seed=seed, max_order=max_order, reports=reports)
    log.info(
        "suite_completed",
        passed=suite.count(CheckStatus.PASSED),
        failed=suite.count(CheckStatus.FAILED),
        inconclusive=suite.count(CheckStatus.INCONCLUSIVE),
    )
    return suite


def exit_code(suite: SuiteReport) -> int:
    """0 when every check passed (or none ran), otherwise 1."""
    return 0 if suite.passed else 1


def suite_to_dict(suite: SuiteReport) -> dict[str, Any]:
    """JSON form of a suite report, validated against its contract."""
    document = suite.model_dump(mode="json")
    validate_document(document, REPORT_SCHEMA)
    return document


def write_report(suite: SuiteReport, path: str | Path) -> None:
    document = suite_to_dict(suite)
    Path(path).write_text(json.dumps(document, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    log.info("report_written", path=str(path), checks=len(suite.reports))


def read_report(path: str | Path) -> SuiteReport:
    """
    Raises:
        ContractValidationError: the file does not match the report schema
    """
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    validate_document(document, REPORT_SCHEMA)
    return SuiteReport.model_validate(document)


def render_summary(suite: SuiteReport) -> str:
    """Plain-text summary of a suite run."""
    env = Environment(undefined=StrictUndefined, keep_trailing_newline=True, autoescape=False)
    template = env.from_string((TEMPLATE_DIR / SUMMARY_TEMPLATE).read_text(encoding="utf-8"))
    return template.render(
        suite=suite,
        passed=suite.count(CheckStatus.PASSED),
        failed=suite.count(CheckStatus.FAILED),
        inconclusive=suite.count(CheckStatus.INCONCLUSIVE),
    )
