"""Generators for the cubic graph families studied here plus their
hand-constructed labelings.

Block wiring is transcribed into explicit edge tables; each labeling
constructor returns the labeling together with its predicted weight so tests
can assert both verification and the closed-form weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadParameters, NotLP0
from .graph import Graph, VertexId, graph_from_edges
from .labeling import KLabeling

# --------------------------------------------------------------------------
# elementary families


def path(n: int) -> Graph:
    if n < 1:
        raise BadParameters(f"path needs n >= 1, got {n}")
    vertices = [f"p{i}" for i in range(n)]
    edges = [(f"p{i}", f"p{i + 1}") for i in range(n - 1)]
    return graph_from_edges(vertices, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameters(f"cycle needs n >= 3, got {n}")
    vertices = [f"c{i}" for i in range(n)]
    edges = [(f"c{i}", f"c{(i + 1) % n}") for i in range(n)]
    return graph_from_edges(vertices, edges)


def double_star(left: int, right: int) -> Graph:
    """Two adjacent centers ``c0``/``c1`` with ``left``/``right`` pendant leaves."""
    if left < 0 or right < 0:
        raise BadParameters("leaf counts must be non-negative")
    vertices = ["c0", "c1"]
    vertices += [f"l{i}" for i in range(left)]
    vertices += [f"r{i}" for i in range(right)]
    edges = [("c0", "c1")]
    edges += [("c0", f"l{i}") for i in range(left)]
    edges += [("c1", f"r{i}") for i in range(right)]
    return graph_from_edges(vertices, edges)


def p2_cycle_with_irdf(p: int, k: int) -> tuple[Graph, KLabeling, int]:
    """The prism of a 4p-cycle with its alternating-diagonal labeling.

    Label k+1 goes to the first row at cycle positions 1, 5, 9, ... and to
    the second row at positions 3, 7, 11, ...; everything else is 0.  The
    weight is 2p(k+1), which meets the degree lower bound exactly.
    """
    if p < 1 or k < 1:
        raise BadParameters(f"need p >= 1 and k >= 1, got p={p}, k={k}")
    g = _prism(4 * p)
    labels = {v: 0 for v in g.vertices}
    for s in range(p):
        labels[f"(p0,c{4 * s + 1})"] = k + 1
        labels[f"(p1,c{4 * s + 3})"] = k + 1
    return g, KLabeling(k=k, labels=labels), 2 * p * (k + 1)


def _prism(n: int) -> Graph:
    from .graph import cartesian_product

    return cartesian_product(path(2), cycle(n))


# --------------------------------------------------------------------------
# generalized Blanusa snarks
#
# Two 10-vertex base blocks (border vertices a, b, c, d) and an 8-vertex
# link block (border vertices x, y, w, z).  Snark number i chains the base
# block with i link blocks:
#   c-y1, d-x1;  w_j-y_{j+1}, z_j-x_{j+1} for j < i;  a-z_i, b-w_i.

_BASE_BLOCK = {
    1: (
        ("a", "i1"), ("i1", "b"), ("b", "i3"), ("i3", "i6"), ("i6", "i5"),
        ("i5", "i4"), ("i4", "i2"), ("i2", "a"), ("i2", "i3"), ("i1", "i5"),
        ("i6", "d"), ("d", "c"), ("c", "i4"),
    ),
    2: (
        ("a", "i1"), ("i1", "b"), ("b", "i3"), ("i3", "d"), ("d", "i4"),
        ("i4", "c"), ("c", "i2"), ("i2", "a"), ("i2", "i5"), ("i5", "i3"),
        ("i5", "i6"), ("i6", "i4"), ("i1", "i6"),
    ),
}

_LINK_BLOCK = (
    ("x", "i1"), ("i1", "y"), ("y", "i3"), ("i3", "z"), ("z", "i4"),
    ("i4", "w"), ("w", "i2"), ("i2", "x"), ("i1", "i4"), ("i2", "i3"),
)

_BASE_VERTICES = ("a", "b", "c", "d", "i1", "i2", "i3", "i4", "i5", "i6")
_LINK_VERTICES = ("x", "y", "w", "z", "i1", "i2", "i3", "i4")


@dataclass(frozen=True)
class BlanusaDescriptor:
    t: int  # which base block, 1 or 2
    i: int  # number of link blocks, >= 1

    def __post_init__(self):
        if self.t not in (1, 2):
            raise BadParameters(f"t must be 1 or 2, got {self.t}")
        if self.i < 1:
            raise BadParameters(f"i must be >= 1, got {self.i}")


def blanusa(d: BlanusaDescriptor) -> Graph:
    """Build the snark with base block ``d.t`` and ``d.i`` link blocks.

    The result has 8i+10 vertices, is 3-regular and connected.
    """
    vertices: list[VertexId] = [f"B0:{v}" for v in _BASE_VERTICES]
    edges: list[tuple[VertexId, VertexId]] = [
        (f"B0:{u}", f"B0:{v}") for u, v in _BASE_BLOCK[d.t]
    ]
    for j in range(1, d.i + 1):
        vertices += [f"L{j}:{v}" for v in _LINK_VERTICES]
        edges += [(f"L{j}:{u}", f"L{j}:{v}") for u, v in _LINK_BLOCK]
    edges.append(("B0:c", "L1:y"))
    edges.append(("B0:d", "L1:x"))
    for j in range(1, d.i):
        edges.append((f"L{j}:w", f"L{j + 1}:y"))
        edges.append((f"L{j}:z", f"L{j + 1}:x"))
    edges.append(("B0:a", f"L{d.i}:z"))
    edges.append(("B0:b", f"L{d.i}:w"))
    return graph_from_edges(vertices, edges)


def blanusa_weight(t: int, i: int, k: int) -> int:
    """Closed-form weight of the special independent labeling."""
    if t == 1 and i >= 3 and i % 2 == 1:
        return (k + 1) * (2 * i + 2) + 2 * k
    return (k + 1) * (2 * i + 3)


# Hand tables for the three smallest members of each family.  Values are
# "+" for label k+1 and "k" for label k; unlisted vertices get 0.
_BLANUSA_BASE_LABELS = {
    (1, 1): {"B0:i1": "+", "B0:i2": "+", "B0:d": "+", "L1:i3": "+", "L1:i4": "+"},
    (2, 1): {"B0:a": "+", "B0:d": "+", "B0:i5": "+", "L1:y": "+", "L1:w": "+"},
    (1, 2): {"B0:a": "+", "B0:i6": "+", "B0:c": "+",
             "L1:x": "+", "L1:z": "+", "L2:y": "+", "L2:w": "+"},
    (2, 2): {"B0:a": "+", "B0:c": "+", "B0:i5": "+",
             "L1:x": "+", "L1:z": "+", "L2:y": "+", "L2:w": "+"},
    (1, 3): {"B0:a": "+", "B0:i4": "k", "B0:i6": "+",
             "L1:x": "k", "L1:y": "+", "L1:w": "+",
             "L2:x": "+", "L2:z": "+", "L3:y": "+", "L3:w": "+"},
    (2, 3): {"B0:a": "+", "B0:d": "+", "B0:i5": "+",
             "L1:y": "+", "L1:w": "+",
             "L2:x": "+", "L2:z": "+", "L3:y": "+", "L3:w": "+"},
}


def blanusa_special_irdf(d: BlanusaDescriptor, k: int) -> tuple[KLabeling, int]:
    """The recursive independent labeling of the snark ``blanusa(d)``.

    Requires k >= 2.  For i >= 2 the result additionally satisfies
    f(a)=k+1, f(b)=0, f(w_i)=k+1, f(z_i)=0, which is what lets two more
    link blocks be appended without touching existing labels: each appended
    pair gets k+1 on x, z of the first block and on y, w of the second.
    """
    if k < 2:
        raise BadParameters(f"special labeling needs k >= 2, got {k}")
    base_i = d.i if d.i <= 3 else (2 if d.i % 2 == 0 else 3)
    marks = dict(_BLANUSA_BASE_LABELS[(d.t, base_i)])
    for j in range(base_i + 2, d.i + 1, 2):
        marks[f"L{j - 1}:x"] = "+"
        marks[f"L{j - 1}:z"] = "+"
        marks[f"L{j}:y"] = "+"
        marks[f"L{j}:w"] = "+"
    g = blanusa(d)
    labels = {v: 0 for v in g.vertices}
    for v, mark in marks.items():
        labels[v] = k + 1 if mark == "+" else k
    return KLabeling(k=k, labels=labels), blanusa_weight(d.t, d.i, k)


# --------------------------------------------------------------------------
# Loupekine snarks
#
# 7-vertex basic blocks b0..b{l-1} joined in a ring by plug-edge pairs, with
# the leftover degree-2 vertices t_i tied off in groups of three through a
# new link-vertex or in pairs through a repairing edge.

_BASIC_BLOCK = (
    ("p", "t"), ("t", "q"), ("q", "r"), ("r", "s"), ("s", "p"),
    ("u", "v"), ("u", "p"), ("v", "q"),
)

LAMINAR = "laminar"
INTERSECTING = "intersecting"


@dataclass(frozen=True)
class LoupekineDescriptor:
    ell: int
    plug_choices: tuple[str, ...]  # choice for each junction i -> i+1 (mod ell)
    link_triples: tuple[frozenset[int], ...]
    repair_pairs: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.ell < 3 or self.ell % 2 == 0:
            raise BadParameters(f"ell must be odd and >= 3, got {self.ell}")
        if len(self.plug_choices) != self.ell:
            raise BadParameters("need one plug choice per junction")
        for c in self.plug_choices:
            if c not in (LAMINAR, INTERSECTING):
                raise BadParameters(f"unknown plug choice {c!r}")
        sigma = len(self.link_triples)
        if sigma < 1 or sigma % 2 == 0:
            raise BadParameters(f"link-vertex count must be odd and >= 1, got {sigma}")
        if sigma > self.ell // 3:
            raise BadParameters(
                f"link-vertex count {sigma} exceeds floor(ell/3) = {self.ell // 3}"
            )
        used: list[int] = []
        for tri in self.link_triples:
            if len(tri) != 3:
                raise BadParameters(f"link triple {set(tri)} must have 3 blocks")
            used += list(tri)
        for pair in self.repair_pairs:
            if len(pair) != 2:
                raise BadParameters(f"repair pair {set(pair)} must have 2 blocks")
            used += list(pair)
        if sorted(used) != list(range(self.ell)):
            raise BadParameters(
                "link triples and repair pairs must partition the block indices"
            )

    @property
    def sigma(self) -> int:
        return len(self.link_triples)

    @property
    def n(self) -> int:
        return 7 * self.ell + self.sigma

    def _run_start(self, blocks: frozenset[int], length: int) -> int | None:
        for start in blocks:
            if blocks == frozenset((start + j) % self.ell for j in range(length)):
                return start
        return None

    @property
    def is_lp0(self) -> bool:
        """Consecutive-blocks variant: every triple is {i,i+1,i+2} and every
        pair {i,i+1}, indices mod ell."""
        return all(self._run_start(t, 3) is not None for t in self.link_triples) and all(
            self._run_start(p, 2) is not None for p in self.repair_pairs
        )


def descriptor(
    ell: int,
    plug_choices: Sequence[str],
    link_triples: Sequence[Sequence[int]],
    repair_pairs: Sequence[Sequence[int]],
) -> LoupekineDescriptor:
    return LoupekineDescriptor(
        ell=ell,
        plug_choices=tuple(plug_choices),
        link_triples=tuple(frozenset(t) for t in link_triples),
        repair_pairs=tuple(frozenset(p) for p in repair_pairs),
    )


def lp0(ell: int, sigma: int, plug: str = LAMINAR) -> LoupekineDescriptor:
    """Canonical consecutive layout: triples on the lowest indices, then pairs."""
    triples = [(3 * m, 3 * m + 1, 3 * m + 2) for m in range(sigma)]
    rest = ell - 3 * sigma
    if rest < 0 or rest % 2:
        raise BadParameters(f"no consecutive layout for ell={ell}, sigma={sigma}")
    pairs = [(3 * sigma + 2 * m, 3 * sigma + 2 * m + 1) for m in range(rest // 2)]
    return descriptor(ell, [plug] * ell, triples, pairs)


def _link_id(tri: frozenset[int]) -> str:
    a, b, c = sorted(tri)
    return f"z:{a},{b},{c}"


def loupekine(d: LoupekineDescriptor) -> Graph:
    """Assemble the snark described by ``d``: 7*ell + sigma vertices, cubic."""
    vertices: list[VertexId] = []
    edges: list[tuple[VertexId, VertexId]] = []
    for i in range(d.ell):
        vertices += [f"b{i}:{v}" for v in ("p", "q", "r", "s", "t", "u", "v")]
        edges += [(f"b{i}:{u}", f"b{i}:{v}") for u, v in _BASIC_BLOCK]
    for i in range(d.ell):
        j = (i + 1) % d.ell
        if d.plug_choices[i] == LAMINAR:
            edges += [(f"b{i}:s", f"b{j}:r"), (f"b{i}:v", f"b{j}:u")]
        else:
            edges += [(f"b{i}:s", f"b{j}:u"), (f"b{i}:v", f"b{j}:r")]
    for tri in d.link_triples:
        z = _link_id(tri)
        vertices.append(z)
        edges += [(f"b{m}:t", z) for m in sorted(tri)]
    for pair in d.repair_pairs:
        a, b = sorted(pair)
        edges.append((f"b{a}:t", f"b{b}:t"))
    return graph_from_edges(vertices, edges)


def lp1_irdf(d: LoupekineDescriptor, k: int) -> tuple[KLabeling, int]:
    """Per-block labeling: k+1 on p and q of every block, k on link-vertices."""
    if k < 1:
        raise BadParameters(f"k must be >= 1, got {k}")
    g = loupekine(d)
    labels = {v: 0 for v in g.vertices}
    for i in range(d.ell):
        labels[f"b{i}:p"] = k + 1
        labels[f"b{i}:q"] = k + 1
    for tri in d.link_triples:
        labels[_link_id(tri)] = k
    return KLabeling(k=k, labels=labels), 2 * (k + 1) * d.ell + k * d.sigma


def _lp0_gadget_runs(d: LoupekineDescriptor) -> tuple[list[int], list[int]]:
    """Start indices of the triple and pair runs of a consecutive layout."""
    if not d.is_lp0:
        raise NotLP0("descriptor is not a consecutive-blocks (LP0) layout")
    triples = [d._run_start(t, 3) for t in d.link_triples]
    pairs = [d._run_start(p, 2) for p in d.repair_pairs]
    return triples, pairs  # type: ignore[return-value]


def lp0_irdf(d: LoupekineDescriptor, k: int) -> tuple[KLabeling, int]:
    """Gadget-wise independent labeling of a consecutive layout.

    Pair gadgets get k+1 on p, q of both blocks.  Triple gadgets starting at
    block l get k+1 on s_l, v_l, on r_{l+2}, u_{l+2} and on the link-vertex,
    and k on p_{l+1}, q_{l+1}.  All active border vertices face 0-labeled
    partners across plug-edges, so independence survives assembly.
    """
    if k < 1:
        raise BadParameters(f"k must be >= 1, got {k}")
    triples, pairs = _lp0_gadget_runs(d)
    g = loupekine(d)
    labels = {v: 0 for v in g.vertices}
    for start in pairs:
        for m in (start, (start + 1) % d.ell):
            labels[f"b{m}:p"] = k + 1
            labels[f"b{m}:q"] = k + 1
    for start in triples:
        m0, m1, m2 = (start, (start + 1) % d.ell, (start + 2) % d.ell)
        labels[f"b{m0}:s"] = k + 1
        labels[f"b{m0}:v"] = k + 1
        labels[f"b{m1}:p"] = k
        labels[f"b{m1}:q"] = k
        labels[f"b{m2}:r"] = k + 1
        labels[f"b{m2}:u"] = k + 1
        labels[_link_id(frozenset((m0, m1, m2)))] = k + 1
    return KLabeling(k=k, labels=labels), 2 * (k + 1) * d.ell + (k - 1) * d.sigma


def lp0_krdf(d: LoupekineDescriptor, k: int) -> tuple[KLabeling, int]:
    """Cheaper non-independent labeling of a consecutive layout.

    Triple gadgets replace the two k-labels with a single k+1 on t_{l+1};
    this puts two adjacent actives on each link-vertex, so the result passes
    the plain verifier but deliberately fails the independent one.
    """
    if k < 1:
        raise BadParameters(f"k must be >= 1, got {k}")
    triples, pairs = _lp0_gadget_runs(d)
    g = loupekine(d)
    labels = {v: 0 for v in g.vertices}
    for start in pairs:
        for m in (start, (start + 1) % d.ell):
            labels[f"b{m}:p"] = k + 1
            labels[f"b{m}:q"] = k + 1
    for start in triples:
        m0, m1, m2 = (start, (start + 1) % d.ell, (start + 2) % d.ell)
        labels[f"b{m0}:s"] = k + 1
        labels[f"b{m0}:v"] = k + 1
        labels[f"b{m1}:t"] = k + 1
        labels[f"b{m2}:r"] = k + 1
        labels[f"b{m2}:u"] = k + 1
        labels[_link_id(frozenset((m0, m1, m2)))] = k + 1
    return KLabeling(k=k, labels=labels), 2 * (k + 1) * d.ell
