"""Deterministic node budgets for the exhaustive searches.

A budget caps the number of backtracking nodes a search may explore, so
"budget exhausted" is reproducible run to run.  The optional wall-clock cap
is inherently nondeterministic and results produced under it say so.
"""

from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a single search invocation.

    max_nodes counts backtracking nodes and is deterministic.  max_seconds,
    if set, aborts on wall clock and is flagged nondeterministic in results.
    """

    max_nodes: int = 10**8
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")

    def counter(self) -> "NodeCounter":
        return NodeCounter(self)


DEFAULT_BUDGET = SearchBudget()


class BudgetExhausted(Exception):
    """Raised internally when a counter runs out; callers turn this into a
    partial/inconclusive result, never into a user-facing error."""

    def __init__(self, nodes: int, wallclock: bool = False):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
        self.wallclock = wallclock


class NodeCounter:
    __slots__ = ("limit", "deadline", "nodes")

    def __init__(self, budget: SearchBudget):
        self.limit = budget.max_nodes
        self.deadline = (
            time.monotonic() + budget.max_seconds
            if budget.max_seconds is not None
            else None
        )
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            self.nodes -= 1
            raise BudgetExhausted(self.nodes)
        # wall clock polled sparsely; it is advisory and nondeterministic
        if self.deadline is not None and (self.nodes & 0xFFF) == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted(self.nodes, wallclock=True)
