"""Toolkit for [k]-Roman and independent [k]-Roman domination on graphs:
exact solvers, labeling verifiers, closed-form bounds, family generators,
and the vertex-cover gadget reduction."""

from .bounds import (
    BoundReport,
    blanusa_bounds,
    cubic_partition_bounds,
    independence_sandwich,
    lb_degree,
    loupekine_bounds,
    partition_bounds,
)
from .errors import (
    BadK,
    BadParameters,
    BudgetExhausted,
    DuplicateEdge,
    EmptyGraph,
    InvalidLabeling,
    KromanError,
    NotApplicable,
    NotAVertexCover,
    NotLP0,
    SelfLoop,
    TooLarge,
    UnknownEndpoint,
    UnknownVertex,
)
from .families import (
    BlanusaDescriptor,
    LoupekineDescriptor,
    blanusa,
    blanusa_special_irdf,
    cycle,
    double_star,
    loupekine,
    lp0,
    lp0_irdf,
    lp0_krdf,
    lp1_irdf,
    p2_cycle_with_irdf,
    path,
)
from .graph import (
    Graph,
    cartesian_product,
    closed_neighborhood,
    graph_from_edges,
    graph_stats,
    is_dominating,
    is_independent,
)
from .labeling import (
    KLabeling,
    VerifyReport,
    active_neighborhood,
    verify_kirdf,
    verify_krdf,
    weight,
)
from .reduction import (
    ReducedInstance,
    build_reduction,
    extract_vc,
    gadget_weight_audit,
    vc_to_irdf,
)
from .solvers import (
    SolveBudget,
    SolveResult,
    brute_force,
    is_independent_k_roman,
    solve_gamma,
    solve_gamma_krdf,
    solve_i,
    solve_i_krdf,
    solve_tau,
)

__version__ = "0.1.0"
