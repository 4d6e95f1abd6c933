"""Branch-and-bound for the minimum-weight labeling without the
independence restriction.

Search assigns labels to vertices in decreasing-degree order.  Soundness of
the pruning rests on one fact: in any valid labeling every vertex v has
f(N[v]) >= k (either its own label reaches k, or the defining inequality
supplies at least k).  The per-node lower bound charges the total closed
neighborhood deficiency against the best case of one label helping
max_degree+1 vertices at once.

Two optional normalizations shrink the branch sets without changing the
optimum: label 1 is dropped for k >= 2, and degree-1 vertices whose
component has at least 3 vertices branch only on {0, k}.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from ..errors import BadParameters
from ..graph import Graph, connected_components
from ..labeling import KLabeling
from .common import (
    BudgetTracker,
    OutOfBudget,
    SolveBudget,
    SolveResult,
    branch_order,
    labels_from_dense,
    solve_registry,
)


class _Found(Exception):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class _RdfEngine:
    def __init__(self, g: Graph, k: int, allowed: list[tuple[int, ...]], tracker: BudgetTracker):
        self.k = k
        self.n = g.n
        self.adj = g.adjacency_indices()
        self.closed = tuple((v, *row) for v, row in enumerate(self.adj))
        self.allowed = allowed
        self.order = branch_order(g)
        self.delta1 = max((len(r) for r in self.adj), default=0) + 1
        self.tracker = tracker

    # -- one search over completions of `pinned`, strictly below `best` ----

    def run(
        self,
        best: int,
        pinned: dict[int, int] | None = None,
        first_only: bool = False,
    ) -> tuple[int, list[int]] | None:
        """Best solution with weight < best (or the first one found when
        ``first_only``).  Returns None when no such solution exists."""
        n, k = self.n, self.k
        self.labels: list[int] = [-1] * n
        self.s = [0] * n
        self.an = [0] * n
        self.u = [len(c) for c in self.closed]
        self.defic = k * n
        self.weight = 0
        self.best = best
        self.best_labels: list[int] | None = None
        self.pinned = pinned or {}
        self.first_only = first_only
        if n == 0:
            return (0, []) if best > 0 else None
        try:
            self._dfs(0)
        except _Found:
            pass
        if self.best_labels is None:
            return None
        return self.best, self.best_labels

    def _choices(self, v: int):
        if v in self.pinned:
            x = self.pinned[v]
            return (x,) if x in self.allowed[v] else ()
        return self.allowed[v]

    def _dfs(self, pos: int) -> None:
        if pos == self.n:
            # all closed neighborhoods finalized along the way; weight < best
            self.best = self.weight
            self.best_labels = self.labels.copy()
            if self.first_only:
                raise _Found
            return
        v = self.order[pos]
        k = self.k
        adj_v = self.adj[v]
        closed_v = self.closed[v]
        for x in self._choices(v):
            self.tracker.tick()
            ok = True
            self.labels[v] = x
            self.weight += x
            for w in closed_v:
                old = self.s[w]
                self.s[w] = old + x
                self.u[w] -= 1
                if old < k:
                    self.defic -= min(x, k - old)
            if x > 0:
                for w in adj_v:
                    self.an[w] += 1
            for w in closed_v:
                if self.u[w] == 0:
                    fw = self.labels[w]
                    if fw < k and self.s[w] < k + self.an[w]:
                        ok = False
                        break
                else:
                    lack = k - self.s[w]
                    if lack > (k + 1) * self.u[w]:
                        ok = False
                        break
            if ok and self.weight + _ceil_div(self.defic, self.delta1) < self.best:
                self._dfs(pos + 1)
            # undo
            if x > 0:
                for w in adj_v:
                    self.an[w] -= 1
            for w in closed_v:
                self.s[w] -= x
                self.u[w] += 1
                if self.s[w] < k:
                    self.defic += min(x, k - self.s[w])
            self.weight -= x
            self.labels[v] = -1


def _allowed_labels(
    g: Graph, k: int, forbid_label_one: bool | None, restrict_leaf_labels: bool
) -> list[tuple[int, ...]]:
    forbid1 = k >= 2 if forbid_label_one is None else forbid_label_one
    base = tuple(x for x in range(k + 2) if not (forbid1 and x == 1))
    allowed = [base] * g.n
    if restrict_leaf_labels:
        adj = g.adjacency_indices()
        big_components = [c for c in connected_components(g) if len(c) >= 3]
        eligible = set().union(*big_components) if big_components else set()
        for v in range(g.n):
            if len(adj[v]) == 1 and v in eligible:
                allowed[v] = (0, k)
    return allowed


def _greedy_dominating(g: Graph) -> list[int]:
    adj = g.adjacency_indices()
    n = g.n
    uncovered = set(range(n))
    chosen: list[int] = []
    while uncovered:
        best_v, best_gain = -1, -1
        for v in range(n):
            gain = len(uncovered & {v, *adj[v]})
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        uncovered -= {best_v, *adj[best_v]}
    return chosen


def _incumbent(g: Graph, k: int) -> tuple[int, list[int]]:
    """A valid labeling to start from: the better of all-k and
    (k+1)-on-a-greedy-dominating-set."""
    n = g.n
    all_k = [k] * n
    dom = _greedy_dominating(g)
    on_dom = [0] * n
    for v in dom:
        on_dom[v] = k + 1
    if (k + 1) * len(dom) <= k * n:
        return (k + 1) * len(dom), on_dom
    return k * n, all_k


def _canonicalize(
    engine: _RdfEngine, witness: list[int], target: int
) -> list[int]:
    """Lexicographically least optimal labeling in vertex order, within the
    engine's branch sets."""
    w = list(witness)
    for i in range(len(w)):
        for x in engine.allowed[i]:
            if x >= w[i]:
                break
            pinned = {j: w[j] for j in range(i)}
            pinned[i] = x
            sol = engine.run(target + 1, pinned=pinned, first_only=True)
            if sol is not None:
                w = sol[1]
                break
    return w


def _solve_pinned(args):
    g, k, forbid1, leaf, budget, bound, pinned = args
    tracker = BudgetTracker(budget)
    engine = _RdfEngine(g, k, _allowed_labels(g, k, forbid1, leaf), tracker)
    try:
        sol = engine.run(bound, pinned=pinned)
        return sol, tracker.nodes, False
    except OutOfBudget:
        return (engine.best, engine.best_labels) if engine.best_labels else None, tracker.nodes, True


def solve_gamma_krdf(
    g: Graph,
    k: int,
    budget: SolveBudget | None = None,
    *,
    forbid_label_one: bool | None = None,
    restrict_leaf_labels: bool = True,
    canonical_witness: bool = True,
    threads: int = 1,
) -> SolveResult:
    """Exact minimum labeling weight, with a canonical optimal witness.

    ``forbid_label_one=None`` applies the k >= 2 normalization
    automatically; pass ``False`` for a fully unrestricted search (used to
    test that the normalizations do not move the optimum).
    """
    if k < 1:
        raise BadParameters(f"k must be >= 1, got {k}")
    budget = budget or SolveBudget()
    start = time.perf_counter()
    tracker = BudgetTracker(budget)
    allowed = _allowed_labels(g, k, forbid_label_one, restrict_leaf_labels)
    engine = _RdfEngine(g, k, allowed, tracker)
    inc_weight, inc_labels = _incumbent(g, k)
    best, best_labels = inc_weight, inc_labels
    exhausted = False
    child_nodes = 0

    if threads > 1 and g.n > 0:
        v0 = engine.order[0]
        tasks = [
            (g, k, forbid_label_one, restrict_leaf_labels, budget, best, {v0: x})
            for x in allowed[v0]
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_solve_pinned, tasks))
        for sol, task_nodes, task_exhausted in results:
            child_nodes += task_nodes
            exhausted = exhausted or task_exhausted
            if sol is not None and sol[0] < best:
                best, best_labels = sol
    else:
        try:
            sol = engine.run(best)
            if sol is not None:
                best, best_labels = sol
        except OutOfBudget:
            exhausted = True
            if engine.best_labels is not None:
                best, best_labels = engine.best, engine.best_labels

    proven = not exhausted
    if proven and canonical_witness:
        try:
            best_labels = _canonicalize(engine, best_labels, best)
        except OutOfBudget:
            pass  # optimum stays proven; witness stays best-effort

    result = SolveResult(
        optimum=best,
        witness=labels_from_dense(g, k, best_labels),
        nodes_explored=child_nodes + tracker.nodes,
        proven_optimal=proven,
        elapsed=time.perf_counter() - start,
    )
    solve_registry.record("gamma_krdf", g, k, result)
    return result
