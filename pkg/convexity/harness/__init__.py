"""
Verification Harness

Theorem-check catalog, suite runner with JSON reports, and the cxh CLI.
"""

from convexity.harness.catalog import CATALOG, CatalogEntry, get_entry, known_ids, resolve_suite
from convexity.harness.models import (
    CheckContext,
    CheckStatus,
    Counterexample,
    SuiteReport,
    TheoremCheck,
    TheoremReport,
)
from convexity.harness.runner import (
    exit_code,
    read_report,
    render_summary,
    run_check,
    run_suite,
    suite_to_dict,
    write_report,
)

__all__ = [
    # Models
    "CheckStatus",
    "TheoremCheck",
    "TheoremReport",
    "SuiteReport",
    "Counterexample",
    "CheckContext",
    # Catalog
    "CATALOG",
    "CatalogEntry",
    "known_ids",
    "get_entry",
    "resolve_suite",
    # Runner
    "run_check",
    "run_suite",
    "exit_code",
    "suite_to_dict",
    "write_report",
    "read_report",
    "render_summary",
]
