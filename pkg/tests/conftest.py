"""Shared fixtures: named small graphs, figure labelings, the seeded random
corpus, and independent subset-enumeration oracles for the set problems."""

from __future__ import annotations

import itertools
import random

import pytest

from kroman import KLabeling, Graph, graph_from_edges
from kroman.families import cycle, double_star, path

CORPUS_SEED = 20250810
EDGE_PROBS = (0.2, 0.4, 0.6)


def make_k1() -> Graph:
    return graph_from_edges(["a"], [])


def make_k4() -> Graph:
    return graph_from_edges(list("abcd"), list(itertools.combinations("abcd", 2)))


@pytest.fixture
def k1():
    return make_k1()


@pytest.fixture
def p2():
    return path(2)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def k4():
    return make_k4()


@pytest.fixture
def star_tree():
    """Two adjacent centers with three leaves each (8 vertices)."""
    return double_star(3, 3)


# -- the hand labelings used across the suite --------------------------------


def p2_rdf_labeling(k: int) -> KLabeling:
    """Two-vertex path labeled (1, k): weight k+1, plain-valid."""
    return KLabeling(k=k, labels={"p0": 1, "p1": k})


def p2_irdf_labeling(k: int) -> KLabeling:
    """Two-vertex path labeled (0, k+1): weight k+1, independence-valid."""
    return KLabeling(k=k, labels={"p0": 0, "p1": k + 1})


def star_rdf_labeling(k: int) -> KLabeling:
    """Both centers k+1, all leaves 0: weight 2k+2, plain-valid only."""
    g = double_star(3, 3)
    labels = {v: 0 for v in g.vertices}
    labels["c0"] = k + 1
    labels["c1"] = k + 1
    return KLabeling(k=k, labels=labels)


def star_irdf_labeling(k: int) -> KLabeling:
    """One center k+1, far leaves k, rest 0: weight 4k+1, independence-valid."""
    g = double_star(3, 3)
    labels = {v: 0 for v in g.vertices}
    labels["c0"] = k + 1
    for leaf in ("r0", "r1", "r2"):
        labels[leaf] = k
    return KLabeling(k=k, labels=labels)


def c6_irdf_labeling(k: int) -> KLabeling:
    """Six-cycle labeled (0, k+1, 0, 0, k+1, 0): weight 2(k+1)."""
    labels = {f"c{i}": 0 for i in range(6)}
    labels["c1"] = k + 1
    labels["c4"] = k + 1
    return KLabeling(k=k, labels=labels)


# -- random corpus ------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    vs = [f"v{j}" for j in range(n)]
    edges = [
        (vs[a], vs[b])
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < p
    ]
    return graph_from_edges(vs, edges)


def corpus(count: int, seed: int = CORPUS_SEED, max_n: int = 9) -> list[Graph]:
    """Deterministic mix of sizes 4..max_n across three edge densities."""
    rng = random.Random(seed)
    sizes = list(range(4, max_n + 1))
    out = []
    idx = 0
    while len(out) < count:
        n = sizes[idx % len(sizes)]
        p = EDGE_PROBS[(idx // len(sizes)) % len(EDGE_PROBS)]
        idx += 1
        out.append(random_graph(rng, n, p))
    return out


# -- subset-enumeration oracles (independent of the solvers package) ----------


def oracle_min_dominating(g: Graph, independent: bool) -> int:
    n = g.n
    masks = g.adjacency_masks()
    closed = [m | (1 << v) for v, m in enumerate(masks)]
    full = (1 << n) - 1
    best = n
    for s in range(1 << n):
        cov = 0
        ok = True
        rest = s
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if independent and masks[v] & s:
                ok = False
                break
            cov |= closed[v]
        if ok and cov == full:
            best = min(best, bin(s).count("1"))
    return best


def oracle_min_vertex_cover(g: Graph) -> int:
    n = g.n
    edges = [(g.index_of(u), g.index_of(v)) for u, v in g.edges()]
    best = n
    for s in range(1 << n):
        if all((s >> u) & 1 or (s >> v) & 1 for u, v in edges):
            best = min(best, bin(s).count("1"))
    return best
