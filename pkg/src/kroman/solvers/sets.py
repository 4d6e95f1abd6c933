"""Exact minimum dominating set, independent dominating set, and vertex
cover, on bitmask state.

Domination search branches on an uncovered vertex with the fewest remaining
candidates and partitions by the first chosen candidate.  Cover search
branches on an uncovered edge.  Lower bounds: uncovered count over
max_degree+1 for domination, a greedy matching for covers.
"""

from __future__ import annotations

import time

from ..graph import Graph
from .common import (
    BudgetTracker,
    OutOfBudget,
    SolveBudget,
    SolveResult,
    set_from_dense,
    solve_registry,
)


class _Found(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _DomEngine:
    def __init__(self, g: Graph, independent: bool, tracker: BudgetTracker):
        self.n = g.n
        self.adj_mask = g.adjacency_masks()
        self.closed_mask = tuple(m | (1 << v) for v, m in enumerate(self.adj_mask))
        self.full = (1 << g.n) - 1
        self.independent = independent
        self.delta1 = max((m.bit_count() for m in self.adj_mask), default=0) + 1
        self.tracker = tracker

    def run(
        self,
        best: int,
        pinned_in: int = 0,
        pinned_out: int = 0,
        first_only: bool = False,
    ) -> tuple[int, int] | None:
        """Best dominating set smaller than ``best`` (strictly), as
        (size, mask); honors forced inclusions/exclusions."""
        self.best = best
        self.best_mask: int | None = None
        self.first_only = first_only
        if self.independent:
            for v in _bits(pinned_in):
                if self.adj_mask[v] & pinned_in:
                    return None
        covered = 0
        for v in _bits(pinned_in):
            covered |= self.closed_mask[v]
        banned = pinned_out
        if self.independent:
            for v in _bits(pinned_in):
                banned |= self.adj_mask[v]
        size = pinned_in.bit_count()
        if size < best:
            try:
                self._dfs(pinned_in, size, covered, banned)
            except _Found:
                pass
        if self.best_mask is None:
            return None
        return self.best, self.best_mask

    def _dfs(self, chosen: int, size: int, covered: int, banned: int) -> None:
        uncovered = self.full & ~covered
        if uncovered == 0:
            self.best = size
            self.best_mask = chosen
            if self.first_only:
                raise _Found
            return
        lb = -(-uncovered.bit_count() // self.delta1)
        if size + lb >= self.best:
            return
        # fail-first: the uncovered vertex with fewest available coverers
        branch_cands, branch_count = 0, self.n + 1
        for w in _bits(uncovered):
            cands = self.closed_mask[w] & ~banned
            c = cands.bit_count()
            if c == 0:
                return
            if c < branch_count:
                branch_cands, branch_count = cands, c
                if c == 1:
                    break
        # order candidates by fresh coverage, ties by index
        cand_list = sorted(
            _bits(branch_cands),
            key=lambda u: (-(self.closed_mask[u] & uncovered).bit_count(), u),
        )
        new_banned = banned
        for u in cand_list:
            self.tracker.tick()
            nb = new_banned | (self.adj_mask[u] if self.independent else 0)
            self._dfs(chosen | (1 << u), size + 1, covered | self.closed_mask[u], nb)
            new_banned |= 1 << u  # later branches exclude earlier candidates


class _VcEngine:
    def __init__(self, g: Graph, tracker: BudgetTracker):
        self.n = g.n
        self.edges = [(g.index_of(u), g.index_of(v)) for u, v in g.edges()]
        self.tracker = tracker

    def run(
        self,
        best: int,
        pinned_in: int = 0,
        pinned_out: int = 0,
        first_only: bool = False,
    ) -> tuple[int, int] | None:
        self.best = best
        self.best_mask: int | None = None
        self.first_only = first_only
        size = pinned_in.bit_count()
        if size < best:
            try:
                self._dfs(pinned_in, size, pinned_out)
            except _Found:
                pass
        if self.best_mask is None:
            return None
        return self.best, self.best_mask

    def _matching_lb(self, chosen: int) -> int:
        used = 0
        count = 0
        for u, v in self.edges:
            bit_u, bit_v = 1 << u, 1 << v
            if (bit_u | bit_v) & chosen:
                continue
            if (bit_u | bit_v) & used:
                continue
            used |= bit_u | bit_v
            count += 1
        return count

    def _dfs(self, chosen: int, size: int, banned: int) -> None:
        open_edge = None
        for u, v in self.edges:
            if not ((1 << u) | (1 << v)) & chosen:
                open_edge = (u, v)
                break
        if open_edge is None:
            self.best = size
            self.best_mask = chosen
            if self.first_only:
                raise _Found
            return
        if size + self._matching_lb(chosen) >= self.best:
            return
        u, v = open_edge
        u_ok = not (banned >> u) & 1
        v_ok = not (banned >> v) & 1
        if u_ok:
            self.tracker.tick()
            self._dfs(chosen | (1 << u), size + 1, banned)
        if v_ok:
            self.tracker.tick()
            self._dfs(chosen | (1 << v), size + 1, banned | (1 << u))


def _greedy_dominating_mask(g: Graph, independent: bool) -> int:
    adj = g.adjacency_masks()
    closed = [m | (1 << v) for v, m in enumerate(adj)]
    full = (1 << g.n) - 1
    uncovered = full
    banned = 0
    chosen = 0
    while uncovered:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            if (banned >> v) & 1 or (chosen >> v) & 1:
                continue
            gain = (closed[v] & uncovered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        uncovered &= ~closed[best_v]
        if independent:
            banned |= adj[best_v]
    return chosen


def _greedy_cover_mask(edges, chosen: int = 0) -> int:
    while True:
        remaining = [e for e in edges if not ((1 << e[0]) | (1 << e[1])) & chosen]
        if not remaining:
            return chosen
        degree = {}
        for u, v in remaining:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        pick = max(degree, key=lambda v: (degree[v], -v))
        chosen |= 1 << pick


def _canonical_set(engine, n: int, opt: int) -> int:
    """Greedy lexicographic reconstruction: include each vertex in turn iff
    an optimum-size solution exists that honors every decision so far."""
    include = 0
    exclude = 0
    for v in range(n):
        if (
            engine.run(opt + 1, pinned_in=include | (1 << v), pinned_out=exclude,
                       first_only=True)
            is not None
        ):
            include |= 1 << v
        else:
            exclude |= 1 << v
    return include


def _run_set_solver(
    g: Graph,
    kind: str,
    budget: SolveBudget | None,
    canonical_witness: bool,
) -> SolveResult:
    budget = budget or SolveBudget()
    start = time.perf_counter()
    tracker = BudgetTracker(budget)
    if kind == "tau":
        engine = _VcEngine(g, tracker)
        greedy = _greedy_cover_mask(
            [(g.index_of(u), g.index_of(v)) for u, v in g.edges()]
        )
    else:
        engine = _DomEngine(g, independent=(kind == "i"), tracker=tracker)
        greedy = _greedy_dominating_mask(g, independent=(kind == "i"))
    best, best_mask = greedy.bit_count(), greedy
    exhausted = False
    try:
        sol = engine.run(best)
        if sol is not None:
            best, best_mask = sol
    except OutOfBudget:
        exhausted = True
        if engine.best_mask is not None:
            best, best_mask = engine.best, engine.best_mask
    proven = not exhausted
    if proven and canonical_witness:
        try:
            best_mask = _canonical_set(engine, g.n, best)
        except OutOfBudget:
            pass
    result = SolveResult(
        optimum=best,
        witness=set_from_dense(g, _bits(best_mask)),
        nodes_explored=tracker.nodes,
        proven_optimal=proven,
        elapsed=time.perf_counter() - start,
    )
    solve_registry.record(kind, g, None, result)
    return result


def solve_i(g: Graph, budget: SolveBudget | None = None, *, canonical_witness: bool = True,
            threads: int = 1) -> SolveResult:
    """Minimum independent dominating set (single-threaded regardless of
    ``threads``; the flag exists for interface uniformity)."""
    return _run_set_solver(g, "i", budget, canonical_witness)


def solve_gamma(g: Graph, budget: SolveBudget | None = None, *,
                canonical_witness: bool = True, threads: int = 1) -> SolveResult:
    """Minimum dominating set."""
    return _run_set_solver(g, "gamma", budget, canonical_witness)


def solve_tau(g: Graph, budget: SolveBudget | None = None, *,
              canonical_witness: bool = True, threads: int = 1) -> SolveResult:
    """Minimum vertex cover."""
    return _run_set_solver(g, "tau", budget, canonical_witness)
