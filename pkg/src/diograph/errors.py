"""Exception types shared across the package."""

from __future__ import annotations


class DiographError(Exception):
    """Base class for all package errors."""


class ResourceLimitError(DiographError):
    """A configured size cap (sieve limit, build cap, solver order cap) was exceeded."""


class OutOfRangeError(DiographError, ValueError):
    """An argument lies outside the range an operation supports."""


class SearchBudgetExceeded(DiographError):
    """An exact search ran out of node budget before proving optimality.

    ``lower_bound`` is the best value found so far.
    """

    def __init__(self, message: str, lower_bound: int, nodes: int):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.nodes = nodes


class GraphParseError(DiographError, ValueError):
    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset
