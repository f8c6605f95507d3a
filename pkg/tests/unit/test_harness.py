"""
Test Verification Harness

Unit tests for the check catalog, the runner's status mapping and the
report files and summary it produces.
"""

from pathlib import Path
from types import SimpleNamespace

import pytest

from convexity.harness import (
    CheckStatus,
    SuiteReport,
    TheoremCheck,
    exit_code,
    known_ids,
    read_report,
    render_summary,
    resolve_suite,
    run_check,
    run_suite,
    suite_to_dict,
    write_report,
)
from convexity.harness.catalog import CatalogEntry, get_entry
from convexity.harness.checks.common import factor_pairs
from convexity.harness.checks.convexity_number import (
    EXACT_PRODUCT_ORDER,
    check_strong_lex_closed_forms,
    check_strong_lex_convexity_alpha,
)
from convexity.harness.models import CheckContext
from convexity.shared.exceptions import (
    BudgetExceededError,
    ContractValidationError,
    EmptyInstanceRangeError,
    ReductionCounterexampleError,
    UnknownCheckError,
)
from convexity.solvers import SearchBudget
from convexity.solvers.independence import independence_number_exact


def _patch_entry(monkeypatch: pytest.MonkeyPatch, run) -> None:
    entry = CatalogEntry("stub", "stub statement", run)
    monkeypatch.setattr("convexity.harness.runner.get_entry", lambda _check_id: entry)


class TestCatalog:
    """Tests for the check catalog and suite resolution."""

    def test_ids(self):
        """Twenty checks, strong-hull first, negative control last."""
        ids = known_ids()
        assert len(ids) == 20
        assert ids[0] == "strong-hull"
        assert ids[-1] == "negative-control"
        assert len(set(ids)) == len(ids)

    def test_all_excludes_negative_control(self):
        """The negative control only runs when named."""
        ids = resolve_suite("all")
        assert "negative-control" not in ids
        assert len(ids) == 19

    def test_id_list_in_catalog_order(self):
        """Requested ids come back in catalog order, deduplicated."""
        assert resolve_suite("lex-hull, strong-hull,lex-hull") == ["strong-hull", "lex-hull"]

    def test_empty_suite(self):
        """An empty id list resolves to nothing."""
        assert resolve_suite("") == []

    def test_unknown_id(self):
        """Unknown ids are reported with the known ones."""
        with pytest.raises(UnknownCheckError) as exc_info:
            resolve_suite("strong-hull,hull-of-everything")
        assert exc_info.value.check_id == "hull-of-everything"
        assert "strong-hull" in exc_info.value.known
        with pytest.raises(UnknownCheckError):
            get_entry("nope")


class TestCheckContext:
    """Tests for CheckContext."""

    def test_streams_depend_on_check_and_tag(self):
        """Each check and tag has its own reproducible stream."""
        a = CheckContext("strong-hull", 42, 2, SearchBudget())
        b = CheckContext("lex-hull", 42, 2, SearchBudget())
        assert a.rng("x").next_u64() == a.rng("x").next_u64()
        assert a.rng("x").next_u64() != b.rng("x").next_u64()
        assert a.rng("x").next_u64() != a.rng("y").next_u64()


class TestRunCheck:
    """Tests for run_check."""

    def test_passing_check(self):
        """Strong products of K2 factors: one instance, passed."""
        report = run_check(TheoremCheck(id="strong-hull", max_order=2))
        assert report.status is CheckStatus.PASSED
        assert report.passed
        assert report.instances_run == 1
        assert report.counterexample is None

    def test_negative_control_fails(self):
        """hn(P2 x P2) = 3, not 4."""
        report = run_check(TheoremCheck(id="negative-control", max_order=2))
        assert report.status is CheckStatus.FAILED
        assert not report.passed
        assert report.counterexample is not None
        assert report.counterexample.values == {"claimed": 4, "exact": 3}
        assert report.counterexample.graphs["G"] == "2 1\n0 1\n"

    def test_budget_overrun_is_inconclusive(self):
        """A search that runs out of budget never passes."""
        check = TheoremCheck(id="negative-control", max_order=2, budget=SearchBudget(max_subsets=1))
        report = run_check(check)
        assert report.status is CheckStatus.INCONCLUSIVE
        assert not report.passed
        assert report.details["budget"]["operation"] == "hull_number_exact"

    def test_budget_error_from_check(self, monkeypatch: pytest.MonkeyPatch):
        """Bounds from the budget error land in the details."""

        def run(ctx: CheckContext):
            ctx.count()
            raise BudgetExceededError("stub_search", "time (1.0s)", lower_bound=2, upper_bound=5)

        _patch_entry(monkeypatch, run)
        report = run_check(TheoremCheck(id="stub"))
        assert report.status is CheckStatus.INCONCLUSIVE
        assert report.details["budget"] == {
            "operation": "stub_search",
            "limit": "time (1.0s)",
            "lower_bound": 2,
            "upper_bound": 5,
        }

    def test_reduction_counterexample_fails(self, monkeypatch: pytest.MonkeyPatch):
        """A construction that fails its own check is a failed check."""

        def run(ctx: CheckContext):
            ctx.count()
            raise ReductionCounterexampleError("lift_hull_set", "does not close", {"missing": [3]})

        _patch_entry(monkeypatch, run)
        report = run_check(TheoremCheck(id="stub"))
        assert report.status is CheckStatus.FAILED
        assert report.counterexample is not None
        assert report.counterexample.values == {"missing": [3]}

    def test_no_instances(self, monkeypatch: pytest.MonkeyPatch):
        """Passing without a single instance is an error, not a pass."""
        _patch_entry(monkeypatch, lambda ctx: None)
        with pytest.raises(EmptyInstanceRangeError):
            run_check(TheoremCheck(id="stub"))


class TestSuiteReports:
    """Tests for run_suite, report files and the summary."""

    @pytest.fixture
    def failed_suite(self) -> SuiteReport:
        return run_suite(["strong-hull", "negative-control"], seed=42, max_order=2)

    def test_empty_suite_passes(self):
        """No checks means nothing failed."""
        suite = run_suite([], seed=1, max_order=2)
        assert suite.reports == []
        assert exit_code(suite) == 0

    def test_exit_code(self, failed_suite: SuiteReport):
        """Any failed check gives exit code 1."""
        assert [r.id for r in failed_suite.reports] == ["strong-hull", "negative-control"]
        assert failed_suite.count(CheckStatus.FAILED) == 1
        assert exit_code(failed_suite) == 1

    def test_unknown_id(self):
        """Ids are validated before anything runs."""
        with pytest.raises(UnknownCheckError):
            run_suite(["strong-hull", "nope"], seed=1, max_order=2)

    def test_report_round_trip(self, failed_suite: SuiteReport, tmp_path: Path):
        """Reports are schema-valid and read back unchanged."""
        target = tmp_path / "report.json"
        write_report(failed_suite, target)
        assert read_report(target) == failed_suite
        assert suite_to_dict(failed_suite)["reports"][1]["status"] == "failed"

    def test_read_rejects_invalid(self, tmp_path: Path):
        """Files that break the contract are refused."""
        target = tmp_path / "bad.json"
        target.write_text('{"seed": 1, "reports": []}\n', encoding="utf-8")
        with pytest.raises(ContractValidationError):
            read_report(target)

    def test_summary(self, failed_suite: SuiteReport):
        """One line per check, counterexample values and the totals."""
        text = render_summary(failed_suite)
        assert text.startswith("Verification suite (seed 42, max order 2)")
        assert "negative-control" in text
        assert "counterexample: grid hull number differs from m + n" in text
        assert "claimed = 4" in text
        assert text.rstrip().endswith("1 passed, 1 failed, 0 inconclusive")


class TestExactProductOrder:
    """Exact convexity search covers strong and lex products up to 16 vertices."""

    MODULE = "convexity.harness.checks.convexity_number"

    def test_alpha_check_reaches_four_by_four(self, monkeypatch: pytest.MonkeyPatch):
        """Every factor pair with orders <= 4 is compared, the 4 x 4 ones included."""
        orders: list[int] = []

        def exact(g, _kind, _budget):
            orders.append(g.n)
            return SimpleNamespace(value=1, witness=None)

        monkeypatch.setattr(f"{self.MODULE}.convexity_number_exact", exact)
        monkeypatch.setattr(
            f"{self.MODULE}.independence_number_exact",
            lambda _g, _budget: SimpleNamespace(value=1, witness=None),
        )
        ctx = CheckContext("strong-lex-convexity-alpha", 1, 4, SearchBudget())
        assert check_strong_lex_convexity_alpha(ctx) is None
        expected = len(list(factor_pairs(4, ordered=False))) + len(list(factor_pairs(4, ordered=True)))
        assert ctx.instances == expected
        assert max(orders) == EXACT_PRODUCT_ORDER == 16

    def test_closed_forms_exact_up_to_sixteen(self, monkeypatch: pytest.MonkeyPatch):
        """Closed forms on 16-vertex products are checked against exact search."""
        real_alpha = independence_number_exact
        orders: list[int] = []

        def exact(g, _kind, budget):
            orders.append(g.n)
            return SimpleNamespace(value=real_alpha(g, budget).value)

        monkeypatch.setattr(f"{self.MODULE}.convexity_number_exact", exact)
        ctx = CheckContext("strong-lex-closed-forms", 1, 4, SearchBudget())
        assert check_strong_lex_closed_forms(ctx) is None
        assert 16 in orders
        assert max(orders) <= EXACT_PRODUCT_ORDER
