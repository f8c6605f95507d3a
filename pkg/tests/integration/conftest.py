"""
Integration test fixtures.

Integration tests drive the cxh entry point end to end: real files under
tmp_path, real settings from the environment, output captured from the
standard streams.
"""

import json
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import pytest

from convexity.harness.cli import main


@dataclass
class CliResult:
    code: int
    out: str
    err: str

    def json(self) -> Any:
        return json.loads(self.out)


@pytest.fixture
def cxh(capsys: pytest.CaptureFixture[str]) -> Callable[..., CliResult]:
    """Run the CLI in-process and capture what it printed."""

    def _run(*argv: str) -> CliResult:
        capsys.readouterr()
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliResult(code=code, out=captured.out, err=captured.err)

    return _run
