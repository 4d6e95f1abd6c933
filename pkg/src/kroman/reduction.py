"""Edge-gadget reduction from vertex cover to the two labeling problems.

Every edge e = uv of the source graph is replaced by a fresh 10-vertex
gadget wired as two paths, u-x1-x2-x3-x4-x5-v and x6-x7-x8-x9-x10, plus the
rungs x2-x7 and x4-x9.  The product has |V| + 10|E| vertices and 12|E|
edges, keeps the source degrees on the original vertices, and has maximum
degree 3.  A vertex cover of size c translates to an independent labeling
of weight c + k|V| + (3k+2)|E|, and that weight is optimal for k >= 3 on
the intended source class.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import BadK, InvalidLabeling, NotAVertexCover
from .graph import Graph, VertexId, graph_from_edges, graph_stats
from .labeling import KLabeling, verify_krdf, weight

logger = logging.getLogger(__name__)

GADGET_SIZE = 10
GADGET_EDGES = 12
AUDIT_SET = (2, 3, 4, 6, 7, 8, 9, 10)  # the forced-weight core of each gadget


@dataclass(frozen=True)
class GadgetInfo:
    """One gadget: the edge endpoints in wiring order (u at x1, v at x5)
    and the ten fresh vertex ids, index j holding x_{j+1}."""

    u: VertexId
    v: VertexId
    xs: tuple[VertexId, ...]


@dataclass(frozen=True)
class ReducedInstance:
    source: Graph
    product: Graph
    k: int
    edge_gadget_map: dict[tuple[VertexId, VertexId], GadgetInfo]
    notes: tuple[str, ...]

    def original(self, v: VertexId) -> VertexId:
        return f"orig:{v}"


def build_reduction(g: Graph, k: int, *, allow_small_k: bool = False) -> ReducedInstance:
    """Replace every edge by a fresh gadget.

    The optimality theorem behind this construction needs k >= 3; smaller k
    is allowed only behind ``allow_small_k`` for exploration, with no
    optimal-weight guarantee attached.  3-regularity and connectivity of the
    source are checked and recorded; 2-connectivity and planarity are
    assumed, not checked.
    """
    if k < 3 and not allow_small_k:
        raise BadK(f"the reduction is proved for k >= 3; got k={k} "
                   "(pass allow_small_k=True to build it anyway)")
    stats = graph_stats(g)
    notes = []
    if stats.regular_r != 3:
        notes.append("source is not 3-regular")
    if not stats.is_connected:
        notes.append("source is not connected")
    notes.append("2-connectivity and planarity of the source are assumed, not checked")

    vertices: list[VertexId] = [f"orig:{v}" for v in g.vertices]
    edges: list[tuple[VertexId, VertexId]] = []
    gadget_map: dict[tuple[VertexId, VertexId], GadgetInfo] = {}
    for idx, (u, v) in enumerate(g.edges()):
        xs = tuple(f"g:e{idx}:{j}" for j in range(1, 11))
        vertices += list(xs)
        x = lambda j: xs[j - 1]  # noqa: E731
        edges += [
            (f"orig:{u}", x(1)), (x(1), x(2)), (x(2), x(3)), (x(3), x(4)),
            (x(4), x(5)), (x(5), f"orig:{v}"),
            (x(6), x(7)), (x(7), x(8)), (x(8), x(9)), (x(9), x(10)),
            (x(2), x(7)), (x(4), x(9)),
        ]
        gadget_map[(u, v)] = GadgetInfo(u=u, v=v, xs=xs)
    product = graph_from_edges(vertices, edges)
    assert product.n == g.n + GADGET_SIZE * g.m
    assert product.m == GADGET_EDGES * g.m
    return ReducedInstance(
        source=g, product=product, k=k, edge_gadget_map=gadget_map, notes=tuple(notes)
    )


def is_vertex_cover(g: Graph, cover: set[VertexId]) -> bool:
    return all(u in cover or v in cover for u, v in g.edges())


def vc_to_irdf(
    r: ReducedInstance, cover: set[VertexId], *, flip_designation: bool = False
) -> KLabeling:
    """Translate a vertex cover of the source into an independent labeling
    of the product, of weight |cover| + k|V| + (3k+2)|E|.

    Each gadget is labeled according to which endpoint covers its edge (the
    designated endpoint).  When both endpoints are covered the
    lexicographically smaller one is designated; ``flip_designation``
    chooses the other, which must yield an equally valid labeling.
    """
    for v in cover:
        r.source.index_of(v)
    if not is_vertex_cover(r.source, cover):
        raise NotAVertexCover(f"{sorted(cover)} misses an edge of the source graph")
    k = r.k
    labels: dict[VertexId, int] = {}
    for v in r.source.vertices:
        labels[f"orig:{v}"] = k + 1 if v in cover else k
    for (u, v), info in r.edge_gadget_map.items():
        for xv in info.xs:
            labels[xv] = 0
        if u in cover and v in cover:
            designated = max(u, v) if flip_designation else min(u, v)
        else:
            designated = u if u in cover else v
        x = info.xs
        if designated == v:
            # the covered endpoint sits at the x5 side
            labels[x[6 - 1]] = k
            labels[x[2 - 1]] = k + 1
            labels[x[9 - 1]] = k + 1
        else:
            labels[x[10 - 1]] = k
            labels[x[4 - 1]] = k + 1
            labels[x[7 - 1]] = k + 1
    return KLabeling(k=k, labels=labels)


def reduction_weight(r: ReducedInstance, cover_size: int) -> int:
    """|cover| + k|V| + (3k+2)|E| for this instance."""
    return cover_size + r.k * r.source.n + (3 * r.k + 2) * r.source.m


def extract_vc(r: ReducedInstance, f: KLabeling) -> set[VertexId]:
    """Original vertices labeled k+1, as a candidate cover of the source.

    Guaranteed to be a vertex cover whenever the labeling is optimal; for
    merely valid labelings the cover property is checked and logged."""
    report = verify_krdf(r.product, f)
    if not report.valid:
        raise InvalidLabeling(
            f"labeling is not valid on the product graph: {report.violations[:3]}"
        )
    extracted = {v for v in r.source.vertices if f.labels[f"orig:{v}"] == r.k + 1}
    if not is_vertex_cover(r.source, extracted):
        logger.warning(
            "extracted set of size %d (weight %d) is not a vertex cover",
            len(extracted), weight(f),
        )
    return extracted


@dataclass(frozen=True)
class GadgetAudit:
    edge: tuple[VertexId, VertexId]
    core_weight: int
    boundary_pair: tuple[int, int]  # labels at x2 and x4
    weight_ok: bool  # core weight equals 3k+2
    pair_ok: bool  # boundary pair is one of (0,0), (k+1,0), (0,k+1)

    @property
    def conforming(self) -> bool:
        return self.weight_ok and self.pair_ok


def gadget_weight_audit(r: ReducedInstance, f: KLabeling) -> list[GadgetAudit]:
    """Per-gadget audit of the forced-weight core {x2,x3,x4,x6,...,x10}.

    In optimal labelings every core weighs exactly 3k+2 and the pair
    (f(x2), f(x4)) is one of (0,0), (k+1,0), (0,k+1); deviations are legal
    for suboptimal labelings and simply flagged.
    """
    k = r.k
    out = []
    for edge, info in sorted(r.edge_gadget_map.items()):
        core = sum(f.labels[info.xs[j - 1]] for j in AUDIT_SET)
        pair = (f.labels[info.xs[2 - 1]], f.labels[info.xs[4 - 1]])
        pair_ok = pair in ((0, 0), (k + 1, 0), (0, k + 1))
        out.append(
            GadgetAudit(
                edge=edge,
                core_weight=core,
                boundary_pair=pair,
                weight_ok=core == 3 * k + 2,
                pair_ok=pair_ok,
            )
        )
    return out
