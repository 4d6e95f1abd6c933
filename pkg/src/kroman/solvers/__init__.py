"""Exact solvers: exhaustive oracles for tiny graphs and pruned
branch-and-bound at desk scale."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetExhausted
from ..graph import Graph
from .brute import brute_force
from .common import SolveBudget, SolveResult, solve_registry
from .irdf import greedy_independent_dominating, solve_i_krdf
from .rdf import solve_gamma_krdf
from .sets import solve_gamma, solve_i, solve_tau

__all__ = [
    "SolveBudget",
    "SolveResult",
    "brute_force",
    "solve_gamma_krdf",
    "solve_i_krdf",
    "solve_i",
    "solve_gamma",
    "solve_tau",
    "is_independent_k_roman",
    "IndependenceClassification",
    "greedy_independent_dominating",
    "solve_registry",
]


@dataclass(frozen=True)
class IndependenceClassification:
    flag: bool  # optimum equals (k+1) times the independent domination number
    i_kr: int
    i_val: int


def is_independent_k_roman(
    g: Graph, k: int, budget: SolveBudget | None = None
) -> IndependenceClassification:
    """Decide whether the independent optimum equals (k+1) * i(G).

    Cross-checked by re-solving with the label k forbidden: the optimum is
    unchanged exactly when some optimal labeling avoids k entirely, which is
    equivalent to the flag.  Disagreement would mean a solver bug, so it is
    asserted.  Raises :class:`BudgetExhausted` if any sub-solve fails to
    prove optimality within the budget.
    """
    r_main = solve_i_krdf(g, k, budget)
    r_ind = solve_i(g, budget)
    r_heavy = solve_i_krdf(g, k, budget, forbid_label_k=True)
    if not (r_main.proven_optimal and r_ind.proven_optimal and r_heavy.proven_optimal):
        raise BudgetExhausted("classification needs proven optima on all three solves")
    flag = r_main.optimum == (k + 1) * r_ind.optimum
    cross = r_heavy.optimum == r_main.optimum
    if flag != cross:
        raise RuntimeError(
            f"classifier disagreement: sandwich test {flag}, no-k test {cross}"
        )
    return IndependenceClassification(flag=flag, i_kr=r_main.optimum, i_val=r_ind.optimum)
