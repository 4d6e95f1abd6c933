"""Shared solver plumbing: budgets, results, canonical witnesses."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Union

from ..graph import Graph
from ..labeling import KLabeling


@dataclass(frozen=True)
class SolveBudget:
    """Wall-clock and node caps for one solve (defaults: 60 s, 1e7 nodes)."""

    time_limit: float = 60.0
    node_limit: int = 10_000_000

    def __post_init__(self):
        if self.time_limit <= 0 or self.node_limit <= 0:
            raise ValueError("budget limits must be positive")


Witness = Union[KLabeling, frozenset]


@dataclass
class SolveResult:
    optimum: int
    witness: Witness
    nodes_explored: int
    proven_optimal: bool
    elapsed: float


class OutOfBudget(Exception):
    """Internal unwind signal; never escapes the solver entry points."""


class BudgetTracker:
    """Counts search nodes and watches the clock.

    Node exhaustion is deterministic; time exhaustion is checked only every
    256 nodes to keep the hot path cheap.
    """

    __slots__ = ("deadline", "node_limit", "nodes", "exhausted")

    def __init__(self, budget: SolveBudget):
        self.deadline = time.perf_counter() + budget.time_limit
        self.node_limit = budget.node_limit
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes >= self.node_limit or (
            self.nodes % 256 == 0 and time.perf_counter() > self.deadline
        ):
            self.exhausted = True
            raise OutOfBudget


def branch_order(g: Graph) -> list[int]:
    """Vertices in decreasing degree; degree ties prefer the vertex whose
    neighbors have the smallest total degree (its neighborhood is the least
    flexible, so deciding it fails fastest), then identifier order.  On
    regular graphs this collapses to plain identifier order."""
    adj = g.adjacency_indices()
    nbr_deg = [sum(len(adj[w]) for w in adj[v]) for v in range(g.n)]
    return sorted(range(g.n), key=lambda i: (-len(adj[i]), nbr_deg[i], i))


def labels_from_dense(g: Graph, k: int, dense: list[int]) -> KLabeling:
    return KLabeling(k=k, labels={g.vertices[i]: dense[i] for i in range(g.n)})


def set_from_dense(g: Graph, dense_set) -> frozenset:
    return frozenset(g.vertices[i] for i in dense_set)


@dataclass
class _Registry:
    """Optional hook used by the test suite: every proven solve is recorded
    so bound-consistency sweeps can audit everything solved anywhere."""

    entries: list = field(default_factory=list)
    enabled: bool = False

    def record(self, kind: str, g: Graph, k: int | None, result: SolveResult) -> None:
        if self.enabled and result.proven_optimal:
            self.entries.append((kind, g, k, result))


solve_registry = _Registry()
