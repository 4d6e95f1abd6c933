"""Branch-and-bound for the minimum-weight labeling whose active vertices
form an independent set.

Valid functions of this kind use only labels {0, k, k+1}, so the search
keeps three decisions per vertex: excluded (label 0), active with weight k,
or active with weight k+1.  A 0-vertex is covered once it has a k+1
neighbor, or two k neighbors when k >= 2.  Unit propagation maintains
per-vertex counts of active and undecided neighbors, forces the last
possible coverer of a starving 0-vertex, and fails early when a 0-vertex
runs out of undecided neighbors.

Three prunes carry the search:

* a demand bound in half-units (a 0-vertex with one k neighbor still needs
  one half) charged against the cheapest possible supply rate of a future
  active vertex;
* component decomposition: when the residual constraint graph (undecided
  vertices, linked directly or through an uncovered 0-vertex) falls apart,
  each part is solved independently and the minima are summed;
* component memoization: a part is identified by its members, its boundary
  demands, and its forced-active marks, so sibling branches reuse solved
  parts.  Gadget-built instances collapse under these two.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from ..errors import BadParameters
from ..graph import Graph
from .common import (
    BudgetTracker,
    OutOfBudget,
    SolveBudget,
    SolveResult,
    branch_order,
    labels_from_dense,
    solve_registry,
)

UNDECIDED = -1
ZERO = 0
ACT_K = 1
ACT_K1 = 2

_DECOMP_MIN = 6  # skip the component scan below this many open vertices


class _Found(Exception):
    pass


class _IrdfEngine:
    def __init__(self, g: Graph, k: int, allow_k: bool, tracker: BudgetTracker):
        self.k = k
        self.n = g.n
        self.adj = g.adjacency_indices()
        self.adj_mask = g.adjacency_masks()
        self.order = branch_order(g)
        self.allow_k = allow_k
        self.tracker = tracker
        delta = max((len(r) for r in self.adj), default=0)
        # cheapest possible cost per half-unit of coverage, as num/den:
        # a k+1 vertex supplies itself (2 halves) plus 2 per neighbor; a k
        # vertex supplies itself plus 1 per neighbor (k >= 2), or only
        # itself.
        cands = [(k + 1, 2 * (delta + 1))]
        if allow_k:
            cands.append((k, 2))
            if k >= 2:
                cands.append((k, delta + 2))
        num, den = cands[0]
        for a, b in cands[1:]:
            if a * den < num * b:
                num, den = a, b
        self.ratio_num, self.ratio_den = num, den

    # -- state ---------------------------------------------------------------

    def _reset(self, pinned: dict[int, int] | None):
        n = self.n
        self.state = [UNDECIDED] * n
        self.cnt_k = [0] * n
        self.cnt_k1 = [0] * n
        self.und = [len(self.adj[v]) for v in range(n)]
        self.required = [False] * n
        self.halves = [2] * n
        self.H = 2 * n
        self.weight = 0
        self.trail: list[tuple[str, int]] = []
        self.pinned = pinned or {}
        self.undecided_mask = (1 << n) - 1
        self.demand_mask = 0  # 0-labeled vertices that still need coverage
        self.scope_mask = (1 << n) - 1
        self.scope_open = n
        self.comp_cache: dict = {}

    def _half_need(self, v: int) -> int:
        st = self.state[v]
        if st == UNDECIDED:
            return 2
        if st != ZERO:
            return 0
        if self.cnt_k1[v] >= 1 or (self.k >= 2 and self.cnt_k[v] >= 2):
            return 0
        if self.k >= 2 and self.cnt_k[v] == 1:
            return 1
        return 2

    def _refresh(self, v: int) -> None:
        new = self._half_need(v)
        if new != self.halves[v]:
            self.H += new - self.halves[v]
            self.halves[v] = new
        if self.state[v] == ZERO and new > 0:
            self.demand_mask |= 1 << v
        else:
            self.demand_mask &= ~(1 << v)

    def _half_lb(self, halves: int) -> int:
        return -(-halves * self.ratio_num // self.ratio_den)

    # -- propagation ----------------------------------------------------------

    def _covered(self, v: int) -> bool:
        return self.cnt_k1[v] >= 1 or (self.k >= 2 and self.cnt_k[v] >= 2)

    def _check_zero(self, w: int, queue: list[tuple[int, int]]) -> bool:
        """Coverage watchdog for a 0-vertex; may force or mark-as-required
        its last undecided neighbor.  False means the branch is dead."""
        if self._covered(w):
            return True
        un = self.und[w]
        if un == 0:
            return False
        if un > 1:
            return True
        z = next(u for u in self.adj[w] if self.state[u] == UNDECIDED)
        pin = self.pinned.get(z)
        options = []
        if pin in (None, ACT_K1):
            options.append(ACT_K1)
        if (
            self.allow_k
            and self.k >= 2
            and self.cnt_k[w] >= 1
            and pin in (None, ACT_K)
        ):
            options.append(ACT_K)
        if not options:
            return False
        if len(options) == 1:
            queue.append((z, options[0]))
        elif not self.required[z]:
            self.required[z] = True
            self.trail.append(("req", z))
        return True

    def _apply(self, v: int, lab: int, queue: list[tuple[int, int]]) -> bool:
        pin = self.pinned.get(v)
        if pin is not None and pin != lab:
            return False
        if lab == ZERO and self.required[v]:
            return False
        if lab == ACT_K and not self.allow_k:
            return False
        self.trail.append(("as", v))
        self.state[v] = lab
        self.undecided_mask &= ~(1 << v)
        if (self.scope_mask >> v) & 1:
            self.scope_open -= 1
        adj_v = self.adj[v]
        if lab == ZERO:
            for w in adj_v:
                self.und[w] -= 1
        else:
            self.weight += self.k if lab == ACT_K else self.k + 1
            for w in adj_v:
                self.und[w] -= 1
                if lab == ACT_K:
                    self.cnt_k[w] += 1
                else:
                    self.cnt_k1[w] += 1
        self._refresh(v)
        for w in adj_v:
            self._refresh(w)
        if lab != ZERO:
            for w in adj_v:
                st = self.state[w]
                if st == UNDECIDED:
                    queue.append((w, ZERO))
                elif st != ZERO:
                    return False  # two adjacent actives
        else:
            if not self._check_zero(v, queue):
                return False
        for w in adj_v:
            if self.state[w] == ZERO and not self._check_zero(w, queue):
                return False
        return True

    def _propagate(self, v: int, lab: int) -> bool:
        queue = [(v, lab)]
        while queue:
            u, want = queue.pop()
            st = self.state[u]
            if st != UNDECIDED:
                if st == want:
                    continue
                return False
            if not self._apply(u, want, queue):
                return False
        return True

    def _unapply(self, v: int) -> None:
        lab = self.state[v]
        self.state[v] = UNDECIDED
        self.undecided_mask |= 1 << v
        if (self.scope_mask >> v) & 1:
            self.scope_open += 1
        adj_v = self.adj[v]
        if lab == ZERO:
            for w in adj_v:
                self.und[w] += 1
        else:
            self.weight -= self.k if lab == ACT_K else self.k + 1
            for w in adj_v:
                self.und[w] += 1
                if lab == ACT_K:
                    self.cnt_k[w] -= 1
                else:
                    self.cnt_k1[w] -= 1
        self._refresh(v)
        for w in adj_v:
            self._refresh(w)

    def _rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            kind, v = self.trail.pop()
            if kind == "req":
                self.required[v] = False
            else:
                self._unapply(v)

    # -- component decomposition ------------------------------------------------

    def _components(self) -> list[tuple[int, int, int]]:
        """Connected parts of the residual constraint graph inside the
        current scope: undecided vertices, adjacent directly or through an
        uncovered 0-vertex.  Returns (member_mask, zero_mask, demand_halves)
        per part, ordered by lowest member."""
        adj_mask = self.adj_mask
        undec = self.undecided_mask & self.scope_mask
        demand = self.demand_mask
        comps = []
        rem = undec
        while rem:
            comp = 0
            zeros = 0
            frontier = rem & -rem
            while frontier:
                comp |= frontier
                reach = 0
                m = frontier
                while m:
                    b = m & -m
                    m ^= b
                    reach |= adj_mask[b.bit_length() - 1]
                z_new = reach & demand & ~zeros
                zeros |= z_new
                while z_new:
                    b = z_new & -z_new
                    z_new ^= b
                    reach |= adj_mask[b.bit_length() - 1]
                frontier = reach & undec & ~comp
            rem &= ~comp
            hsum = 2 * comp.bit_count()
            zm = zeros
            while zm:
                b = zm & -zm
                zm ^= b
                hsum += self.halves[b.bit_length() - 1]
            comps.append((comp, zeros, hsum))
        return comps

    def _solve_scope(
        self, scope_mask: int, ub: int, root: bool = False
    ) -> tuple[int, tuple[tuple[int, int], ...]] | None:
        """Minimum-weight completion of the given undecided vertices (and
        their attached coverage obligations), strictly below ``ub``.
        Returns (weight delta, assignments) or None."""
        if ub <= 0:
            return None
        saved = (self.scope_mask, self.scope_open, self.scope_entry_weight,
                 self.scope_other_h, self.scope_best, self.scope_best_asg,
                 self.scope_entry_mark, self.scope_root)
        h_scope = 0
        m = scope_mask
        zeros_seen = 0
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            h_scope += self.halves[v]
            zeros_seen |= self.adj_mask[v] & self.demand_mask
        while zeros_seen:
            b = zeros_seen & -zeros_seen
            zeros_seen ^= b
            h_scope += self.halves[b.bit_length() - 1]
        self.scope_mask = scope_mask
        self.scope_open = scope_mask.bit_count()
        self.scope_entry_weight = self.weight
        self.scope_other_h = self.H - h_scope
        self.scope_best = ub
        self.scope_best_asg = None
        self.scope_entry_mark = len(self.trail)
        self.scope_root = root
        try:
            self._dfs(0)
        except _Found:
            pass
        result = None
        if self.scope_best_asg is not None:
            result = (self.scope_best, self.scope_best_asg)
        (self.scope_mask, self.scope_open, self.scope_entry_weight,
         self.scope_other_h, self.scope_best, self.scope_best_asg,
         self.scope_entry_mark, self.scope_root) = saved
        return result

    def _node_assignments(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (v, self.state[v])
            for kind, v in self.trail[self.scope_entry_mark:]
            if kind == "as"
        )

    def _record(self, delta: int, asg: tuple[tuple[int, int], ...]) -> None:
        self.scope_best = delta
        self.scope_best_asg = asg
        if self.scope_root:
            self.root_solution = (delta, asg)
            if self.first_only:
                raise _Found

    def _solve_component(
        self, comp_mask: int, zero_mask: int, ub: int
    ) -> tuple[int, tuple[tuple[int, int], ...]] | None:
        """Component solve with bounded memoization.  The cache key is the
        members, the demand state of the attached 0-vertices, and the
        forced-active marks; everything else a component solve can read is
        determined by those."""
        zstate = []
        zm = zero_mask
        while zm:
            b = zm & -zm
            zm ^= b
            z = b.bit_length() - 1
            zstate.append((z, self.halves[z]))
        req = 0
        mm = comp_mask
        while mm:
            b = mm & -mm
            mm ^= b
            if self.required[b.bit_length() - 1]:
                req |= b
        sig = (comp_mask, tuple(zstate), req)
        hit = self.comp_cache.get(sig)
        if hit is not None:
            kind, val, asg = hit
            if kind == "exact":
                return (val, asg) if val < ub else None
            if val >= ub:  # proven: minimum >= val >= ub
                return None
        sub = self._solve_scope(comp_mask, ub)
        if sub is None:
            if hit is None or hit[1] < ub:
                self.comp_cache[sig] = ("lb", ub, None)
            return None
        self.comp_cache[sig] = ("exact", sub[0], sub[1])
        return sub

    def _try_decompose(self, comps: list[tuple[int, int, int]]) -> None:
        """Solve each residual component independently and combine."""
        delta = self.weight - self.scope_entry_weight
        suffix_lb = [0] * (len(comps) + 1)
        for i in range(len(comps) - 1, -1, -1):
            suffix_lb[i] = suffix_lb[i + 1] + self._half_lb(comps[i][2])
        solved = []
        total = 0
        for i, (comp_mask, zero_mask, _) in enumerate(comps):
            ub_i = self.scope_best - delta - total - suffix_lb[i + 1]
            sub = self._solve_component(comp_mask, zero_mask, ub_i)
            if sub is None:
                return
            total += sub[0]
            solved.append(sub)
        asg = self._node_assignments()
        for _, sub_asg in solved:
            asg += sub_asg
        self._record(delta + total, asg)

    # -- search ----------------------------------------------------------------

    def run(
        self,
        best: int,
        pinned: dict[int, int] | None = None,
        first_only: bool = False,
    ) -> tuple[int, list[int]] | None:
        self._reset(pinned)
        self.first_only = first_only
        self.root_solution: tuple[int, tuple] | None = None
        # scope bookkeeping placeholders consumed by _solve_scope
        self.scope_entry_weight = 0
        self.scope_other_h = 0
        self.scope_best = best
        self.scope_best_asg = None
        self.scope_entry_mark = 0
        self.scope_root = True
        if self.n == 0:
            return (0, []) if best > 0 else None
        sol = self._solve_scope((1 << self.n) - 1, best, root=True)
        if sol is None:
            return None
        return sol[0], self._asg_to_labels(sol[1])

    def _asg_to_labels(self, asg) -> list[int]:
        labels = [0] * self.n
        to_label = {ZERO: 0, ACT_K: self.k, ACT_K1: self.k + 1}
        for v, st in asg:
            labels[v] = to_label[st]
        return labels

    def _dfs(self, pos: int) -> None:
        n = self.n
        order = self.order
        state = self.state
        scope_mask = self.scope_mask
        while pos < n and (
            not (scope_mask >> order[pos]) & 1 or state[order[pos]] != UNDECIDED
        ):
            pos += 1
        if pos == n or self.scope_open == 0:
            self._record(self.weight - self.scope_entry_weight,
                         self._node_assignments())
            return
        if self.scope_open >= _DECOMP_MIN:
            comps = self._components()
            if len(comps) > 1:
                self._try_decompose(comps)
                return
        v = order[pos]
        if v in self.pinned:
            labs: tuple[int, ...] = (self.pinned[v],)
        else:
            labs = (ACT_K1, ACT_K, ZERO)
        for lab in labs:
            if lab == ACT_K and not self.allow_k:
                continue
            if lab == ZERO and self.required[v]:
                continue
            self.tracker.tick()
            mark = len(self.trail)
            if self._propagate(v, lab):
                delta = self.weight - self.scope_entry_weight
                scope_h = self.H - self.scope_other_h
                if delta + self._half_lb(scope_h) < self.scope_best:
                    self._dfs(pos + 1)
            self._rollback(mark)


def greedy_independent_dominating(g: Graph) -> list[int]:
    """Maximal independent set chosen by coverage gain; always dominating."""
    adj = g.adjacency_indices()
    n = g.n
    uncovered = set(range(n))
    blocked = [False] * n
    chosen: list[int] = []
    while uncovered:
        best_v, best_gain = -1, -1
        for v in range(n):
            if blocked[v]:
                continue
            gain = len(uncovered & {v, *adj[v]})
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        blocked[best_v] = True
        for w in adj[best_v]:
            blocked[w] = True
        uncovered -= {best_v, *adj[best_v]}
    return chosen


def _canonicalize(engine: _IrdfEngine, witness: list[int], target: int) -> list[int]:
    k = engine.k
    to_state = {0: ZERO, k: ACT_K, k + 1: ACT_K1}
    label_options = [0, k, k + 1] if engine.allow_k else [0, k + 1]
    w = list(witness)
    for i in range(len(w)):
        for x in label_options:
            if x >= w[i]:
                break
            pinned = {j: to_state[w[j]] for j in range(i)}
            pinned[i] = to_state[x]
            sol = engine.run(target + 1, pinned=pinned, first_only=True)
            if sol is not None:
                w = sol[1]
                break
    return w


def _solve_pinned(args):
    g, k, allow_k, budget, bound, pinned = args
    tracker = BudgetTracker(budget)
    engine = _IrdfEngine(g, k, allow_k, tracker)
    try:
        sol = engine.run(bound, pinned=pinned)
        return sol, tracker.nodes, False
    except OutOfBudget:
        sol = engine.root_solution
        if sol is not None:
            sol = (sol[0], engine._asg_to_labels(sol[1]))
        return sol, tracker.nodes, True


def solve_i_krdf(
    g: Graph,
    k: int,
    budget: SolveBudget | None = None,
    *,
    forbid_label_k: bool = False,
    canonical_witness: bool = True,
    threads: int = 1,
    initial_upper: tuple[int, list[int]] | None = None,
) -> SolveResult:
    """Exact minimum weight over independent labelings.

    Never infeasible: k+1 on any maximal independent set is valid, and that
    greedy solution seeds the incumbent (a caller-supplied ``initial_upper``
    of (weight, dense labels) can seed it tighter).  ``forbid_label_k``
    restricts active labels to {k+1}, which is how the independence
    classifier cross-checks itself.
    """
    if k < 1:
        raise BadParameters(f"k must be >= 1, got {k}")
    budget = budget or SolveBudget()
    start = time.perf_counter()
    tracker = BudgetTracker(budget)
    allow_k = not forbid_label_k
    engine = _IrdfEngine(g, k, allow_k, tracker)
    mis = greedy_independent_dominating(g)
    best = (k + 1) * len(mis)
    best_labels = [0] * g.n
    for v in mis:
        best_labels[v] = k + 1
    if initial_upper is not None and initial_upper[0] < best:
        best, best_labels = initial_upper[0], list(initial_upper[1])
    exhausted = False
    child_nodes = 0

    if threads > 1 and g.n > 0:
        v0 = engine.order[0]
        states = (ACT_K1, ACT_K, ZERO) if allow_k else (ACT_K1, ZERO)
        tasks = [(g, k, allow_k, budget, best, {v0: st}) for st in states]
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
            if engine.root_solution is not None and engine.root_solution[0] < best:
                best = engine.root_solution[0]
                best_labels = engine._asg_to_labels(engine.root_solution[1])

    proven = not exhausted
    if proven and canonical_witness:
        try:
            best_labels = _canonicalize(engine, best_labels, best)
        except OutOfBudget:
            pass

    result = SolveResult(
        optimum=best,
        witness=labels_from_dense(g, k, best_labels),
        nodes_explored=child_nodes + tracker.nodes,
        proven_optimal=proven,
        elapsed=time.perf_counter() - start,
    )
    solve_registry.record("i_krdf", g, k, result)
    return result
