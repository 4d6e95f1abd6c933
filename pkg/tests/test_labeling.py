from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kroman import KLabeling, active_neighborhood, verify_kirdf, verify_krdf, weight
from kroman.errors import BadParameters
from kroman.families import path
from kroman.labeling import labeling_from_json_dict, labeling_to_json_dict

from conftest import (
    c6_irdf_labeling,
    p2_irdf_labeling,
    p2_rdf_labeling,
    random_graph,
    star_irdf_labeling,
    star_rdf_labeling,
)


def test_weight_examples(p2):
    assert weight(p2_rdf_labeling(3)) == 4
    assert weight(KLabeling(k=2, labels={v: 0 for v in p2.vertices})) == 0
    assert weight(c6_irdf_labeling(2)) == 6


def test_label_range_enforced():
    with pytest.raises(BadParameters):
        KLabeling(k=2, labels={"a": 4})
    with pytest.raises(BadParameters):
        KLabeling(k=0, labels={})


def test_active_neighborhood(star_tree):
    f = star_rdf_labeling(4)
    assert active_neighborhood(star_tree, f, "l0") == {"c0"}
    g = star_irdf_labeling(2)
    assert active_neighborhood(star_tree, g, "c1") == {"c0", "r0", "r1", "r2"}
    zero = KLabeling(k=3, labels={v: 0 for v in star_tree.vertices})
    assert active_neighborhood(star_tree, zero, "c0") == set()


@pytest.mark.parametrize("k", range(1, 7))
def test_verify_krdf_accepts_hand_labelings(p2, star_tree, k):
    assert verify_krdf(p2, p2_rdf_labeling(k)).valid
    assert verify_krdf(star_tree, star_rdf_labeling(k)).valid


@pytest.mark.parametrize("k", range(2, 6))
def test_verify_krdf_rejects_uncovered_leaf(p2, k):
    report = verify_krdf(p2, KLabeling(k=k, labels={"p0": 0, "p1": k}))
    assert not report.valid
    (viol,) = report.violations
    assert viol.vertex == "p0" and viol.kind == "coverage"


def test_verify_krdf_single_vertex(k1):
    assert verify_krdf(k1, KLabeling(k=3, labels={"a": 3})).valid
    assert not verify_krdf(k1, KLabeling(k=3, labels={"a": 2})).valid


def test_verify_krdf_reports_all_violations():
    g = path(4)
    f = KLabeling(k=3, labels={v: 0 for v in g.vertices})
    report = verify_krdf(g, f)
    assert len(report.violations) == 4


@pytest.mark.parametrize("k", range(1, 7))
def test_verify_kirdf_accepts_hand_labelings(p2, c6, star_tree, k):
    assert verify_kirdf(p2, p2_irdf_labeling(k)).valid
    assert verify_kirdf(c6, c6_irdf_labeling(k)).valid
    assert verify_kirdf(star_tree, star_irdf_labeling(k)).valid


def test_verify_kirdf_rejects_adjacent_actives(star_tree):
    report = verify_kirdf(star_tree, star_rdf_labeling(3))
    assert not report.valid
    assert any(v.kind == "independence" for v in report.violations)


def test_verify_kirdf_notes_middle_labels():
    g = path(3)
    f = KLabeling(k=3, labels={"p0": 2, "p1": 0, "p2": 4})
    report = verify_kirdf(g, f)
    assert report.notes and "p0" in report.notes[0]
    # the stray label always causes a concrete violation as well
    assert not report.valid


def test_verify_totality():
    g = path(2)
    report = verify_krdf(g, KLabeling(k=2, labels={"p0": 2}))
    assert not report.valid
    assert any(v.kind == "label-range" for v in report.violations)


def test_labeling_json_round_trip():
    f = star_irdf_labeling(4)
    obj = json.loads(json.dumps(labeling_to_json_dict(f)))
    g = labeling_from_json_dict(obj)
    assert g.k == f.k and dict(g.labels) == dict(f.labels)


def _kirdf_restatement(g, f) -> bool:
    """Direct restatement for labelings over {0, k, k+1}: active set is
    independent and every 0-vertex sees a k+1 neighbor or, for k >= 2, two
    k neighbors."""
    k = f.k
    active = f.active_set()
    for u, w in g.edges():
        if u in active and w in active:
            return False
    for v in g.vertices:
        if f.labels[v] != 0:
            continue
        heavy = sum(1 for w in g.neighbors(v) if f.labels[w] == k + 1)
        mid = sum(1 for w in g.neighbors(v) if f.labels[w] == k)
        if heavy >= 1 or (k >= 2 and mid >= 2):
            continue
        return False
    return True


def test_coverage_rule_equivalence_bulk():
    """The covered-by-k+1-or-two-k restatement agrees with the definitional
    verifier on >= 10^4 random {0,k,k+1} labelings of random graphs."""
    rng = random.Random(1234)
    checked = 0
    agree_valid = 0
    while checked < 10_500:
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        k = rng.randint(1, 6)
        labels = {v: rng.choice([0, k, k + 1]) for v in g.vertices}
        f = KLabeling(k=k, labels=labels)
        direct = verify_kirdf(g, f).valid
        assert direct == _kirdf_restatement(g, f)
        checked += 1
        agree_valid += direct
    assert checked >= 10_000
    assert agree_valid > 0  # the sample hits both outcomes


@given(st.integers(min_value=1, max_value=5), st.integers(), st.data())
def test_coverage_rule_equivalence_property(k, seed, data):
    g = random_graph(random.Random(seed), data.draw(st.integers(2, 8)), 0.4)
    labels = {
        v: data.draw(st.sampled_from([0, k, k + 1]), label=v) for v in g.vertices
    }
    f = KLabeling(k=k, labels=labels)
    assert verify_kirdf(g, f).valid == _kirdf_restatement(g, f)


@given(st.integers(min_value=1, max_value=6), st.integers())
def test_weight_two_ways(k, seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 10), 0.5)
    f = KLabeling(k=k, labels={v: rng.randint(0, k + 1) for v in g.vertices})
    # weight() asserts the vertex-sum equals the partition sum internally
    assert weight(f) == sum(f.labels.values())
