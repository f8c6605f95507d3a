"""
Verification Harness Models

Checks, per-check reports and the suite report written by `cxh verify`.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from convexity.graph_core.io import emit_edge_list
from convexity.graph_core.models import Graph, VertexSet
from convexity.shared.prng import SplitMix64, derive_seed
from convexity.solvers.models import SearchBudget


class CheckStatus(str, Enum):
    """Outcome of one theorem check."""

    PASSED = "passed"
    """Every instance satisfied the statement."""

    FAILED = "failed"
    """A counterexample was found; the report carries it."""

    INCONCLUSIVE = "inconclusive"
    """A search budget ran out before the check finished."""

    @classmethod
    def from_string(cls, value: str) -> "CheckStatus":
        try:
            return cls(value.lower())
        except ValueError as e:
            raise ValueError(
                f"Invalid status: '{value}'. Valid values are: {[s.value for s in cls]}"
            ) from e


class TheoremCheck(BaseModel):
    """One catalog entry scheduled with a seed and budget."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., min_length=1, description="Catalog id")
    seed: int = Field(default=42, ge=0, description="Suite seed")
    max_order: int = Field(default=4, ge=2, description="Factor order cap")
    budget: SearchBudget = Field(default_factory=SearchBudget, description="Per-search budget")


class Counterexample(BaseModel):
    """
    Replayable evidence for a failed check.

    Graphs are embedded as edge-list text, so a failure can be re-checked
    without regenerating the instance stream.
    """

    model_config = ConfigDict(frozen=True)

    note: str = Field(..., description="What went wrong")
    graphs: dict[str, str] = Field(default_factory=dict, description="Name -> edge-list text")
    sets: dict[str, list[int]] = Field(default_factory=dict, description="Name -> vertex ids")
    values: dict[str, Any] = Field(default_factory=dict, description="Name -> expected/actual values")


class TheoremReport(BaseModel):
    """Result of running one check."""

    model_config = ConfigDict(frozen=True)

    id: str
    status: CheckStatus
    passed: bool
    instances_run: int = Field(..., ge=0)
    counterexample: Counterexample | None = None
    wallclock: float = Field(..., ge=0, description="Seconds")
    details: dict[str, Any] = Field(default_factory=dict)


class SuiteReport(BaseModel):
    """Reports of one suite run, in catalog order."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(..., ge=0)
    max_order: int = Field(..., ge=2)
    reports: list[TheoremReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status is CheckStatus.PASSED for r in self.reports)

    def count(self, status: CheckStatus) -> int:
        return sum(1 for r in self.reports if r.status is status)


@dataclass
class CheckContext:
    """
    Mutable state handed to a check function.

    Checks count their instances here and draw randomness from streams
    derived from the check's own seed.
    """

    check_id: str
    seed: int
    max_order: int
    budget: SearchBudget
    instances: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    def count(self, k: int = 1) -> None:
        self.instances += k

    def rng(self, tag: str) -> SplitMix64:
        return SplitMix64(derive_seed(self.seed, f"{self.check_id}/{tag}"))

    def counterexample(
        self,
        note: str,
        *,
        graphs: dict[str, Graph] | None = None,
        sets: dict[str, VertexSet] | None = None,
        **values: Any,
    ) -> Counterexample:
        return Counterexample(
            note=note,
            graphs={name: emit_edge_list(g) for name, g in (graphs or {}).items()},
            sets={name: s.to_list() for name, s in (sets or {}).items()},
            values=values,
        )
