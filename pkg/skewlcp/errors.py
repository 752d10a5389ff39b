"""Exception hierarchy shared by the library and the command line.

The CLI maps each class to an exit code (see `cli.commands.EXIT_CODES`).
"""

from __future__ import annotations


class SkewLcpError(Exception):
    """Base class for every error raised on purpose by skewlcp."""


class InputError(SkewLcpError, ValueError):
    """Invalid parameters, malformed manifests or violated preconditions."""


class BudgetExceeded(SkewLcpError):
    """A distance engine would need more work than its budget allows."""

    def __init__(self, message: str, *, needed: int, budget: int) -> None:
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class SearchExhausted(SkewLcpError):
    """A seeded random search ran out of retries."""


class ConsistencyError(SkewLcpError):
    """Two independent computations of the same object disagree."""
