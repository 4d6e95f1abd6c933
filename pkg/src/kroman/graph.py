"""Immutable simple undirected graphs with string vertex identifiers.

Vertex identifiers are structured strings (e.g. ``"B0:a"``, ``"(p0,c3)"``,
``"g:e12:7"``).  Their total lexicographic order is the canonical order used
everywhere for tie-breaking.  Internally each vertex maps to a dense index in
``0..n-1`` (in identifier order) so the solvers can work on bitmasks; the
public API speaks identifiers only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    EmptyGraph,
    FormatError,
    InvalidVertexId,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)

VertexId = str


class Graph:
    """A finite simple undirected graph, immutable after construction.

    Instances are safe to share across worker processes.  Use
    :func:`graph_from_edges` or the parsers below instead of calling the
    constructor with pre-validated data.
    """

    __slots__ = ("_vertices", "_index", "_adj", "_adj_ids", "_masks", "_m")

    def __init__(self, vertices: tuple[VertexId, ...], adj: tuple[tuple[int, ...], ...], m: int):
        self._vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}
        self._adj = adj
        self._adj_ids = tuple(tuple(vertices[j] for j in row) for row in adj)
        masks = []
        for row in adj:
            mask = 0
            for j in row:
                mask |= 1 << j
            masks.append(mask)
        self._masks = tuple(masks)
        self._m = m

    # -- identity ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        """All vertex identifiers in sorted (canonical) order."""
        return self._vertices

    def __contains__(self, v: VertexId) -> bool:
        return v in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- queries -----------------------------------------------------------

    def index_of(self, v: VertexId) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def degree(self, v: VertexId) -> int:
        return len(self._adj[self.index_of(v)])

    def neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        return self._adj_ids[self.index_of(v)]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return self.index_of(v) in self._adj[self.index_of(u)]

    def edges(self) -> list[tuple[VertexId, VertexId]]:
        """All edges as sorted pairs, in lexicographic order."""
        out = []
        for i, row in enumerate(self._adj):
            for j in row:
                if i < j:
                    out.append((self._vertices[i], self._vertices[j]))
        out.sort()
        return out

    # -- dense views for the solvers ----------------------------------------

    def adjacency_indices(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    def __getstate__(self):
        return (self._vertices, self._adj, self._m)

    def __setstate__(self, state):
        vertices, adj, m = state
        self.__init__(vertices, adj, m)


def graph_from_edges(
    vertex_list: Sequence[VertexId],
    edge_list: Iterable[tuple[VertexId, VertexId]],
) -> Graph:
    """Build a graph from explicit vertex and edge lists.

    Every edge endpoint must appear in ``vertex_list``; self-loops and
    repeated edges (in either orientation) are rejected.
    """
    seen: set[VertexId] = set()
    for v in vertex_list:
        if not isinstance(v, str) or not v:
            raise InvalidVertexId(f"vertex ids must be non-empty strings, got {v!r}")
        if v in seen:
            raise DuplicateVertex(f"vertex {v!r} declared twice")
        seen.add(v)
    vertices = tuple(sorted(seen))
    index = {v: i for i, v in enumerate(vertices)}
    adj_sets: list[set[int]] = [set() for _ in vertices]
    m = 0
    for u, v in edge_list:
        if u not in index:
            raise UnknownEndpoint(f"edge endpoint {u!r} not declared as a vertex")
        if v not in index:
            raise UnknownEndpoint(f"edge endpoint {v!r} not declared as a vertex")
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}")
        i, j = index[u], index[v]
        if j in adj_sets[i]:
            raise DuplicateEdge(f"edge {u!r}-{v!r} given twice")
        adj_sets[i].add(j)
        adj_sets[j].add(i)
        m += 1
    adj = tuple(tuple(sorted(s)) for s in adj_sets)
    return Graph(vertices, adj, m)


def closed_neighborhood(g: Graph, v: VertexId) -> set[VertexId]:
    """N[v] = {v} together with all neighbors of v."""
    return {v, *g.neighbors(v)}


def is_independent(g: Graph, s: Iterable[VertexId]) -> bool:
    """True iff no edge of the graph has both endpoints in ``s``."""
    idx = [g.index_of(v) for v in s]
    mask = 0
    for i in idx:
        mask |= 1 << i
    adj_masks = g.adjacency_masks()
    return all(adj_masks[i] & mask == 0 for i in idx)


def is_dominating(g: Graph, s: Iterable[VertexId]) -> bool:
    """True iff every vertex outside ``s`` has a neighbor in ``s``."""
    mask = 0
    for v in s:
        mask |= 1 << g.index_of(v)
    adj_masks = g.adjacency_masks()
    for i in range(g.n):
        if not (mask >> i) & 1 and adj_masks[i] & mask == 0:
            return False
    return True


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (u1,v1)~(u2,v2) iff they agree on one coordinate
    and are adjacent in the other factor.  Vertex ids are ``"(u,v)"``.
    """
    if g.n == 0 or h.n == 0:
        raise EmptyGraph("cartesian product requires two non-empty graphs")
    vertices = [f"({u},{v})" for u in g.vertices for v in h.vertices]
    edges: list[tuple[str, str]] = []
    for u in g.vertices:
        for v1, v2 in h.edges():
            edges.append((f"({u},{v1})", f"({u},{v2})"))
    for u1, u2 in g.edges():
        for v in h.vertices:
            edges.append((f"({u1},{v})", f"({u2},{v})"))
    return graph_from_edges(vertices, edges)


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    max_degree: int
    is_connected: bool
    regular_r: int | None  # r when the graph is r-regular, else None


def graph_stats(g: Graph) -> GraphStats:
    degrees = [len(row) for row in g.adjacency_indices()]
    max_degree = max(degrees, default=0)
    regular = degrees and min(degrees) == max_degree
    return GraphStats(
        n=g.n,
        m=g.m,
        max_degree=max_degree,
        is_connected=is_connected(g),
        regular_r=max_degree if regular else None,
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    adj = g.adjacency_indices()
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == g.n


def connected_components(g: Graph) -> list[set[int]]:
    """Components as sets of dense indices."""
    adj = g.adjacency_indices()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        stack = [start]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    comp.add(j)
                    stack.append(j)
        comps.append(comp)
    return comps


# -- serialization ----------------------------------------------------------
#
# Edge-list text, one record per line:  `v <id>` declares a vertex,
# `e <id> <id>` an edge, `#` starts a comment.  UTF-8, LF line endings.
# JSON: {"vertices": [...], "edges": [[u, v], ...]}.


def graph_to_edge_list_text(g: Graph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_edge_list_text(text: str) -> Graph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}")
    return graph_from_edges(vertices, edges)


def graph_to_json_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json_dict(obj: dict) -> Graph:
    try:
        vertices = list(obj["vertices"])
        edges = [(u, v) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc
    return graph_from_edges(vertices, edges)


def load_graph(path: str) -> Graph:
    """Read a graph file, auto-detecting JSON versus edge-list text."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return graph_from_json_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from exc
    return graph_from_edge_list_text(text)
