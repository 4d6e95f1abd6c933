from __future__ import annotations

import itertools

import pytest

from kroman import (
    BadK,
    InvalidLabeling,
    KLabeling,
    NotAVertexCover,
    build_reduction,
    extract_vc,
    gadget_weight_audit,
    graph_stats,
    solve_i_krdf,
    solve_tau,
    vc_to_irdf,
    verify_kirdf,
    weight,
)
from kroman.families import cycle, path
from kroman.reduction import is_vertex_cover, reduction_weight
from kroman.solvers import SolveBudget

from conftest import make_k4


@pytest.fixture
def k4_instance():
    return build_reduction(make_k4(), 3)


def test_build_shapes(k4_instance):
    r = k4_instance
    assert r.product.n == 64 and r.product.m == 72
    st = graph_stats(r.product)
    assert st.max_degree == 3 and st.is_connected
    # original vertices keep their source degree
    for v in r.source.vertices:
        assert r.product.degree(f"orig:{v}") == r.source.degree(v)


def test_build_single_edge():
    r = build_reduction(path(2), 3)
    assert r.product.n == 12 and r.product.m == 12
    assert "source is not 3-regular" in r.notes


def test_build_triangle_gadget_degrees():
    r = build_reduction(cycle(3), 4)
    assert r.product.n == 33
    info = r.edge_gadget_map[("c0", "c1")]
    expected = {1: 2, 2: 3, 3: 2, 4: 3, 5: 2, 6: 1, 7: 3, 8: 2, 9: 3, 10: 1}
    for j, deg in expected.items():
        assert r.product.degree(info.xs[j - 1]) == deg


def test_build_rejects_small_k():
    with pytest.raises(BadK):
        build_reduction(make_k4(), 2)
    r = build_reduction(make_k4(), 2, allow_small_k=True)
    assert r.k == 2


def test_vc_to_irdf_all_minimum_covers(k4_instance):
    r = k4_instance
    assert solve_tau(r.source).optimum == 3
    for cover in itertools.combinations("abcd", 3):
        f = vc_to_irdf(r, set(cover))
        assert weight(f) == 81 == reduction_weight(r, 3)
        assert verify_kirdf(r.product, f).valid


def test_vc_to_irdf_single_edge():
    r = build_reduction(path(2), 3)
    f = vc_to_irdf(r, {"p0"})
    assert weight(f) == 1 + 3 * 2 + 11 * 1 == 18
    assert verify_kirdf(r.product, f).valid


def test_vc_to_irdf_rejects_non_cover(k4_instance):
    with pytest.raises(NotAVertexCover):
        vc_to_irdf(k4_instance, {"a", "b"})


def test_designation_flip(k4_instance):
    r = k4_instance
    full = set("abcd")  # every edge has both endpoints covered
    for flip in (False, True):
        f = vc_to_irdf(r, full, flip_designation=flip)
        assert verify_kirdf(r.product, f).valid
        assert weight(f) == reduction_weight(r, 4)
    assert vc_to_irdf(r, full).labels != vc_to_irdf(r, full, flip_designation=True).labels


def test_extract_round_trip(k4_instance):
    r = k4_instance
    for cover in itertools.combinations("abcd", 3):
        f = vc_to_irdf(r, set(cover))
        assert extract_vc(r, f) == set(cover)


def test_extract_checks_validity(k4_instance):
    r = k4_instance
    bad = KLabeling(k=3, labels={v: 0 for v in r.product.vertices})
    with pytest.raises(InvalidLabeling):
        extract_vc(r, bad)


def test_extract_suboptimal_reports_cover(k4_instance):
    r = k4_instance
    # all originals k+1 and every gadget in its constructed state
    f = vc_to_irdf(r, set("abcd"))
    assert extract_vc(r, f) == set("abcd")


def test_gadget_audit_on_construction(k4_instance):
    r = k4_instance
    f = vc_to_irdf(r, {"a", "b", "c"})
    audits = gadget_weight_audit(r, f)
    assert len(audits) == 6
    assert all(a.core_weight == 11 for a in audits)
    assert all(a.conforming for a in audits)


def test_gadget_audit_flags_heavy_labeling(k4_instance):
    r = k4_instance
    heavy = KLabeling(k=3, labels={v: 4 for v in r.product.vertices})
    audits = gadget_weight_audit(r, heavy)
    assert all(a.core_weight == 8 * 4 for a in audits)
    assert not any(a.conforming for a in audits)


def test_is_vertex_cover_helper(k4):
    assert is_vertex_cover(k4, {"a", "b", "c"})
    assert not is_vertex_cover(k4, {"a"})


def test_incumbent_consistency_under_budget(k4_instance):
    """Even with a tiny budget the solver's incumbent can never beat the
    construction value."""
    r = k4_instance
    res = solve_i_krdf(r.product, 3, SolveBudget(time_limit=60, node_limit=20_000))
    assert res.optimum >= 81
