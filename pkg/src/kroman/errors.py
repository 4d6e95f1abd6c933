"""Exception types shared across the package."""

from __future__ import annotations


class KromanError(Exception):
    """Base class for all errors raised by this package."""


# --- graph construction -------------------------------------------------


class GraphError(KromanError):
    pass


class UnknownVertex(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class InvalidVertexId(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class FormatError(GraphError):
    """Malformed edge-list text or graph JSON."""


# --- generators / bounds -------------------------------------------------


class BadParameters(KromanError):
    pass


class NotApplicable(KromanError):
    pass


class NotLP0(KromanError):
    pass


# --- solvers --------------------------------------------------------------


class TooLarge(KromanError):
    """Instance exceeds the hard size cap of the exhaustive oracle."""


class BudgetExhausted(KromanError):
    """Raised only at API boundaries that demand a proven optimum.

    Solver functions themselves do not raise on exhaustion; they return the
    incumbent with ``proven_optimal=False``.
    """


# --- reduction ------------------------------------------------------------


class BadK(KromanError):
    pass


class NotAVertexCover(KromanError):
    pass


class InvalidLabeling(KromanError):
    pass
