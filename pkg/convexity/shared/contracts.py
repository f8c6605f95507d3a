"""
JSON contracts.

The machine-readable artifacts (suite reports, reduction envelopes) are
checked against the JSON Schemas shipped in convexity/contracts/ before
they are written and after they are read.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any

import structlog
from jsonschema import Draft202012Validator

from convexity.shared.config import get_settings
from convexity.shared.exceptions import ContractValidationError

log = structlog.get_logger()

REPORT_SCHEMA = "report_schema.json"
REDUCTION_SCHEMA = "reduction_schema.json"


@lru_cache(maxsize=8)
def _validator(path: Path) -> Draft202012Validator:
    schema = json.loads(path.read_text(encoding="utf-8"))
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def validate_document(document: dict[str, Any], schema_name: str) -> None:
    """
    Validate a JSON document against a contract schema.

    Raises:
        ContractValidationError: listing every violation, sorted by path
    """
    validator = _validator(get_settings().schema_dir / schema_name)
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        problems = [f"{'/'.join(str(p) for p in e.absolute_path) or '<root>'}: {e.message}" for e in errors]
        log.warning("contract_violation", schema=schema_name, problems=len(problems))
        raise ContractValidationError(schema_name, problems)
