"""
Custom Exceptions for the Convexity Toolkit

All exceptions follow the pattern of specific, actionable errors
with the context needed for debugging and logging.
"""

from dataclasses import dataclass
from typing import Any


class ConvexityError(Exception):
    """Base exception for the convexity toolkit."""

    def __init__(self, message: str, **context: Any) -> None:
        self.message = message
        self.context = context
        super().__init__(message)

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join(f"{k}={v!r}" for k, v in self.context.items())
            return f"{self.message} ({context_str})"
        return self.message

    def __reduce__(self) -> tuple[Any, ...]:
        # Subclass constructors differ; rebuild from state so errors cross process pools.
        return _restore_error, (type(self), self.args, self.__dict__)


def _restore_error(cls: type[ConvexityError], args: tuple[Any, ...], state: dict[str, Any]) -> ConvexityError:
    error = cls.__new__(cls)
    error.args = args
    error.__dict__.update(state)
    return error


# =====================================================
# Graph input
# =====================================================


class GraphFormatError(ConvexityError):
    """Graph text could not be decoded."""

    def __init__(self, message: str, *, line: int | None = None, **context: Any) -> None:
        self.line = line
        if line is not None:
            context = {"line": line, **context}
        super().__init__(message, **context)


class MalformedHeaderError(GraphFormatError):
    """Edge-list header is not "n m" with non-negative integers."""

    def __init__(self, header: str, line: int | None = 1, reason: str | None = None) -> None:
        self.header = header
        self.reason = reason
        message = f"Malformed edge-list header: {header!r}"
        if reason is not None:
            message = f"{message}: {reason}"
        super().__init__(message, line=line)


class EdgeCountMismatchError(GraphFormatError):
    """Number of edge lines differs from the header's m."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Header declares {expected} edges but {actual} were given",
            expected=expected,
            actual=actual,
        )


@dataclass
class VertexOutOfRangeError(GraphFormatError):
    """A vertex id is outside 0..n-1."""

    vertex: int
    n: int

    def __init__(self, vertex: int, n: int, line: int | None = None) -> None:
        self.vertex = vertex
        self.n = n
        super().__init__(
            f"Vertex {vertex} is out of range for a graph on {n} vertices",
            line=line,
            vertex=vertex,
            n=n,
        )


@dataclass
class DuplicateEdgeError(GraphFormatError):
    """The same undirected edge was given twice."""

    u: int
    v: int

    def __init__(self, u: int, v: int, line: int | None = None) -> None:
        self.u = u
        self.v = v
        super().__init__(f"Duplicate edge {u}-{v}", line=line, u=u, v=v)


@dataclass
class SelfLoopError(GraphFormatError):
    """An edge joins a vertex to itself."""

    vertex: int

    def __init__(self, vertex: int, line: int | None = None) -> None:
        self.vertex = vertex
        super().__init__(f"Self-loop at vertex {vertex}", line=line, vertex=vertex)


@dataclass
class EdgeOrderError(GraphFormatError):
    """An edge line lists its endpoints as u > v."""

    u: int
    v: int

    def __init__(self, u: int, v: int, line: int | None = None) -> None:
        self.u = u
        self.v = v
        super().__init__(f"Edge {u} {v} must be written with u < v", line=line, u=u, v=v)


class Graph6FormatError(GraphFormatError):
    """graph6 text is empty, badly padded, uses illegal bytes or is too large."""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"Invalid graph6 data: {reason}")


class InvalidFamilySpecError(ConvexityError):
    """Generator family parameters are not admissible."""

    def __init__(self, family: str, reason: str) -> None:
        self.family = family
        self.reason = reason
        super().__init__(f"Cannot generate {family}: {reason}", family=family)


# =====================================================
# Products and solver preconditions
# =====================================================


class EmptyFactorError(ConvexityError):
    """A product factor has no vertices."""

    def __init__(self, side: str) -> None:
        self.side = side
        super().__init__(f"Product factor {side} is empty", side=side)


class PreconditionError(ConvexityError):
    """An operation was called outside its documented domain."""

    def __init__(self, operation: str, reason: str, **context: Any) -> None:
        self.operation = operation
        self.reason = reason
        super().__init__(f"{operation}: {reason}", **context)


class NotAHullSetError(PreconditionError):
    """A set expected to be a hull set does not generate the whole graph."""

    def __init__(self, operation: str, members: list[int], convexity: str = "cc") -> None:
        self.members = members
        self.convexity = convexity
        super().__init__(
            operation,
            f"set is not a {convexity}-hull set",
            members=members,
        )


class NotBipartiteError(PreconditionError):
    """Input graph must be bipartite but contains an odd cycle."""

    def __init__(self, operation: str, odd_cycle: list[int]) -> None:
        self.odd_cycle = odd_cycle
        super().__init__(operation, "graph is not bipartite", odd_cycle=odd_cycle)


class DisconnectedFactorError(PreconditionError):
    """Product formulas need nontrivial connected factors."""

    def __init__(self, operation: str, side: str) -> None:
        self.side = side
        super().__init__(
            operation,
            f"factor {side} must be connected with at least two vertices",
            side=side,
        )


@dataclass
class BudgetExceededError(ConvexityError):
    """Exact search ran out of its vertex, enumeration or time budget."""

    operation: str
    limit: str
    lower_bound: int | None = None
    upper_bound: int | None = None

    def __init__(
        self,
        operation: str,
        limit: str,
        lower_bound: int | None = None,
        upper_bound: int | None = None,
    ) -> None:
        self.operation = operation
        self.limit = limit
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        super().__init__(
            f"{operation} exceeded its {limit} budget",
            limit=limit,
            lower_bound=lower_bound,
            upper_bound=upper_bound,
        )


class ReductionCounterexampleError(ConvexityError):
    """A reduction certificate failed its check; carries the offending sets."""

    def __init__(self, operation: str, reason: str, artifact: dict[str, Any]) -> None:
        self.operation = operation
        self.artifact = artifact
        super().__init__(f"{operation}: {reason}", **artifact)


class ContractValidationError(ConvexityError):
    """A JSON artifact does not match its contract schema."""

    def __init__(self, schema: str, problems: list[str]) -> None:
        self.schema = schema
        self.problems = problems
        super().__init__(f"Document violates {schema}", problems=problems)


# =====================================================
# Verification harness
# =====================================================


class UnknownCheckError(ConvexityError):
    """Requested check id is not in the catalog."""

    def __init__(self, check_id: str, known: list[str]) -> None:
        self.check_id = check_id
        self.known = known
        super().__init__(f"Unknown check id '{check_id}'", known=known)


class EmptyInstanceRangeError(ConvexityError):
    """A check's instance range produced no instances."""

    def __init__(self, check_id: str, max_order: int) -> None:
        self.check_id = check_id
        self.max_order = max_order
        super().__init__(
            f"Check '{check_id}' has no instances with max_order={max_order}",
            check_id=check_id,
            max_order=max_order,
        )
