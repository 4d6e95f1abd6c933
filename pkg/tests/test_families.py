from __future__ import annotations

import pytest

from kroman import (
    BadParameters,
    BlanusaDescriptor,
    blanusa,
    blanusa_special_irdf,
    cycle,
    graph_stats,
    loupekine,
    lp0,
    lp0_irdf,
    lp0_krdf,
    lp1_irdf,
    p2_cycle_with_irdf,
    path,
    verify_kirdf,
    verify_krdf,
    weight,
)
from kroman.errors import NotLP0
from kroman.families import INTERSECTING, LAMINAR, blanusa_weight, descriptor, double_star


def test_path_cycle_basics():
    assert path(2).n == 2
    assert graph_stats(cycle(6)).regular_r == 2
    with pytest.raises(BadParameters):
        cycle(2)
    with pytest.raises(BadParameters):
        path(0)


def test_double_star_shape():
    g = double_star(3, 3)
    assert g.n == 8 and g.m == 7
    assert g.degree("c0") == 4 and g.degree("l0") == 1


@pytest.mark.parametrize("p,k", [(1, 1), (1, 4), (2, 2), (2, 5), (3, 3)])
def test_prism_construction_verifies(p, k):
    g, f, predicted = p2_cycle_with_irdf(p, k)
    assert predicted == 2 * p * (k + 1)
    assert weight(f) == predicted
    assert verify_kirdf(g, f).valid
    assert graph_stats(g).regular_r == 3


def test_prism_bad_parameters():
    with pytest.raises(BadParameters):
        p2_cycle_with_irdf(0, 3)


# -- the snark family built from two base blocks and chained link blocks ----


def test_blanusa_small_shapes():
    g = blanusa(BlanusaDescriptor(t=1, i=1))
    st = graph_stats(g)
    assert (st.n, st.m, st.regular_r, st.is_connected) == (18, 27, 3, True)
    g = blanusa(BlanusaDescriptor(t=2, i=2))
    assert g.n == 26 and graph_stats(g).regular_r == 3
    g = blanusa(BlanusaDescriptor(t=1, i=5))
    assert g.n == 50 and graph_stats(g).regular_r == 3


def test_blanusa_border_wiring():
    # the chain edges that distinguish the family members
    g1 = blanusa(BlanusaDescriptor(t=1, i=1))
    for u, v in [("B0:c", "L1:y"), ("B0:d", "L1:x"), ("B0:a", "L1:z"), ("B0:b", "L1:w")]:
        assert g1.has_edge(u, v)
    g2 = blanusa(BlanusaDescriptor(t=1, i=2))
    assert g2.has_edge("L1:w", "L2:y") and g2.has_edge("L1:z", "L2:x")
    assert g2.has_edge("B0:a", "L2:z") and not g2.has_edge("B0:a", "L1:z")


def test_blanusa_block_fingerprints():
    # base blocks: 10 vertices, 13 edges, borders of degree 2; link block:
    # 8 vertices, 10 edges (checked through the i=1 member)
    g = blanusa(BlanusaDescriptor(t=2, i=1))
    assert g.n == 18 and g.m == 27
    base = [v for v in g.vertices if v.startswith("B0:")]
    link = [v for v in g.vertices if v.startswith("L1:")]
    assert len(base) == 10 and len(link) == 8


def test_blanusa_bad_parameters():
    with pytest.raises(BadParameters):
        BlanusaDescriptor(t=3, i=1)
    with pytest.raises(BadParameters):
        BlanusaDescriptor(t=1, i=0)


@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("i", [1, 2, 3, 4, 5, 8, 9])
@pytest.mark.parametrize("k", [2, 5, 8])
def test_blanusa_special_irdf(t, i, k):
    d = BlanusaDescriptor(t=t, i=i)
    g = blanusa(d)
    f, predicted = blanusa_special_irdf(d, k)
    assert predicted == blanusa_weight(t, i, k)
    assert weight(f) == predicted
    assert verify_kirdf(g, f).valid
    if i >= 2:
        assert f.labels["B0:a"] == k + 1 and f.labels["B0:b"] == 0
        assert f.labels[f"L{i}:w"] == k + 1 and f.labels[f"L{i}:z"] == 0


def test_blanusa_special_needs_k2():
    with pytest.raises(BadParameters):
        blanusa_special_irdf(BlanusaDescriptor(t=1, i=1), 1)


def test_blanusa_weight_cases():
    assert blanusa_weight(1, 3, 2) == 28  # odd chain on the first base block
    assert blanusa_weight(2, 3, 2) == 27
    assert blanusa_weight(1, 1, 5) == 30


# -- the ring assembly from 7-vertex basic blocks ----------------------------


def test_loupekine_figure_descriptors():
    # five blocks, alternating plug styles, one link-vertex on blocks 0,2,4
    d = descriptor(
        5,
        [LAMINAR, INTERSECTING, LAMINAR, INTERSECTING, LAMINAR],
        [(0, 2, 4)],
        [(1, 3)],
    )
    g = loupekine(d)
    assert g.n == 36 and graph_stats(g).regular_r == 3
    assert not d.is_lp0
    # consecutive variant of the same size
    d0 = descriptor(
        5,
        [LAMINAR, INTERSECTING, LAMINAR, INTERSECTING, LAMINAR],
        [(0, 1, 2)],
        [(3, 4)],
    )
    assert d0.is_lp0
    assert loupekine(d0).n == 36


def test_loupekine_wrapping_runs_count_as_consecutive():
    d = descriptor(5, [LAMINAR] * 5, [(4, 0, 1)], [(2, 3)])
    assert d.is_lp0


def test_loupekine_bad_parameters():
    with pytest.raises(BadParameters):
        lp0(3, 3)  # sigma exceeds floor(ell/3)
    with pytest.raises(BadParameters):
        lp0(4, 1)  # even ell
    with pytest.raises(BadParameters):
        descriptor(5, [LAMINAR] * 5, [(0, 1, 2)], [(3, 3)])  # bad pair
    with pytest.raises(BadParameters):
        descriptor(5, [LAMINAR] * 5, [(0, 1, 2)], [(2, 3)])  # not a partition


@pytest.mark.parametrize("ell,sigma", [(3, 1), (5, 1), (7, 1), (9, 1), (9, 3), (11, 3)])
@pytest.mark.parametrize("k", [1, 4, 8])
def test_lp1_irdf(ell, sigma, k):
    d = lp0(ell, sigma)
    g = loupekine(d)
    f, predicted = lp1_irdf(d, k)
    assert predicted == 2 * (k + 1) * ell + k * sigma
    assert weight(f) == predicted
    assert verify_kirdf(g, f).valid


@pytest.mark.parametrize("ell,sigma", [(3, 1), (5, 1), (9, 3)])
@pytest.mark.parametrize("k", [1, 2, 6])
def test_lp0_irdf(ell, sigma, k):
    d = lp0(ell, sigma)
    g = loupekine(d)
    f, predicted = lp0_irdf(d, k)
    assert predicted == 2 * (k + 1) * ell + (k - 1) * sigma
    assert weight(f) == predicted
    assert verify_kirdf(g, f).valid


@pytest.mark.parametrize("ell,sigma,k", [(3, 1, 1), (5, 1, 4), (7, 1, 3)])
def test_lp0_krdf(ell, sigma, k):
    d = lp0(ell, sigma)
    g = loupekine(d)
    f, predicted = lp0_krdf(d, k)
    assert predicted == 2 * (k + 1) * ell
    assert weight(f) == predicted
    assert verify_krdf(g, f).valid
    # two adjacent actives sit on every link-vertex by construction
    assert not verify_kirdf(g, f).valid


def test_lp0_constructions_reject_general_layout():
    d = descriptor(
        5,
        [LAMINAR, INTERSECTING, LAMINAR, INTERSECTING, LAMINAR],
        [(0, 2, 4)],
        [(1, 3)],
    )
    with pytest.raises(NotLP0):
        lp0_irdf(d, 3)
    with pytest.raises(NotLP0):
        lp0_krdf(d, 3)
    # the per-block labeling still applies to the general layout
    g = loupekine(d)
    f, predicted = lp1_irdf(d, 4)
    assert weight(f) == predicted == 54
    assert verify_kirdf(g, f).valid


def test_intersecting_plugs_also_verify():
    d = lp0(5, 1, plug=INTERSECTING)
    g = loupekine(d)
    for build in (lp1_irdf, lp0_irdf):
        f, _ = build(d, 3)
        assert verify_kirdf(g, f).valid
