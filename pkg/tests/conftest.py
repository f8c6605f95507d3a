"""
Pytest Configuration and Shared Fixtures

Provides settings isolation, small named graphs, budgets and file helpers.
"""

import os
from collections.abc import Callable, Generator
from pathlib import Path

import pytest

# Set test environment before importing application modules
os.environ["CXH_LOG_LEVEL"] = "WARNING"
os.environ["CXH_TIME_LIMIT"] = "60"

from convexity.graph_core.generators import complete, cycle, named_graph, path  # noqa: E402
from convexity.graph_core.io import emit_edge_list  # noqa: E402
from convexity.graph_core.models import Graph  # noqa: E402
from convexity.shared.config import get_settings  # noqa: E402
from convexity.solvers.models import SearchBudget  # noqa: E402

# --- Settings Fixtures ---


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Reload settings around every test so env changes do not leak."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def budget() -> SearchBudget:
    """Generous budget for exact solves in unit tests."""
    return SearchBudget(max_n=30, max_subsets=5_000_000, time_limit=60.0)


@pytest.fixture
def tiny_budget() -> SearchBudget:
    """Budget that any nontrivial search exhausts."""
    return SearchBudget(max_n=64, max_subsets=3, time_limit=60.0)


# --- Graph Fixtures ---


@pytest.fixture
def p3() -> Graph:
    """Path 0-1-2."""
    return path(3)


@pytest.fixture
def c4() -> Graph:
    """Cycle 0-1-2-3-0."""
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def diamond() -> Graph:
    """C4 0-1-2-3-0 with the chord 0-2."""
    return named_graph("diamond")


@pytest.fixture
def bowtie() -> Graph:
    """Two triangles sharing vertex 2."""
    return named_graph("bowtie")


# --- File Fixtures ---


@pytest.fixture
def write_graph(tmp_path: Path) -> Callable[[Graph, str], Path]:
    """Write a graph as an edge-list file under tmp_path and return its path."""

    def _write(g: Graph, name: str = "graph.el") -> Path:
        target = tmp_path / name
        target.write_text(emit_edge_list(g), encoding="utf-8")
        return target

    return _write
