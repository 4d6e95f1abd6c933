from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kroman import (
    blanusa_bounds,
    cubic_partition_bounds,
    independence_sandwich,
    lb_degree,
    loupekine_bounds,
    partition_bounds,
)
from kroman.bounds import CSV_HEADER, BoundReport
from kroman.errors import BadParameters, NotApplicable


def test_lb_degree_examples():
    r = lb_degree(16, 3, 4, connected=True, nontrivial=True)
    assert r.applicable and r.value == 20
    r = lb_degree(6, 2, 2, connected=True, nontrivial=True)
    assert r.applicable and r.value == 6 and "max degree >= k" in r.reason
    r = lb_degree(1, 0, 3, connected=True, nontrivial=False)
    assert not r.applicable and r.value is None


def test_lb_degree_case_selection():
    # k >= 4 case fires when the degree cases do not
    r = lb_degree(10, 2, 5, connected=True, nontrivial=True)
    assert r.applicable and r.value == -(-10 * 6 // 3)
    assert "k >= 4" in r.reason
    # no case: k = 3, max degree 2
    r = lb_degree(10, 2, 3, connected=True, nontrivial=True)
    assert not r.applicable


@given(
    st.integers(min_value=2, max_value=60),
    st.integers(min_value=3, max_value=8),
    st.integers(min_value=1, max_value=9),
)
def test_lb_degree_monotone(n, delta, k):
    val = lb_degree(n, delta, k, True, True).value
    assert lb_degree(n + 1, delta, k, True, True).value >= val
    assert lb_degree(n, delta, k + 1, True, True).value >= val
    bigger_delta = lb_degree(n, delta + 1, k, True, True).value
    assert bigger_delta <= val


def test_independence_sandwich():
    s = independence_sandwich(5, 4)
    assert (s.lower, s.upper) == (20, 25)
    s = independence_sandwich(1, 7)
    assert (s.lower, s.upper) == (7, 8)
    s = independence_sandwich(2, 2)
    assert (s.lower, s.upper) == (4, 6)


def test_partition_bounds():
    pb = partition_bounds(5, 25, 4)
    assert (pb.max_k1, pb.min_k) == (5, 0)
    pb = partition_bounds(3, 4 * 3, 3)  # i_kr at the (k+1)*i upper end
    assert (pb.max_k1, pb.min_k) == (3, 0)
    pb = partition_bounds(10, 26, 2)
    assert pb.max_k1 == 6


def test_cubic_partition_bounds():
    cb = cubic_partition_bounds(18, 25, 4)
    assert (cb.max_k, cb.min_k1) == (2, 3)
    cb = cubic_partition_bounds(16, 20, 4)
    assert cb.max_k == 0
    with pytest.raises(NotApplicable):
        cubic_partition_bounds(18, 25, 1)
    with pytest.raises(NotApplicable):
        cubic_partition_bounds(18, 25, 4, cubic=False)


def _by_name(reports):
    return {r.bound_name: r for r in reports}


def test_blanusa_bounds_odd_first_family():
    r = _by_name(blanusa_bounds(1, 3, 2))
    assert r["upper_i_kr"].value == 28
    assert r["lower_i_kr"].value == 26
    assert r["i_and_gamma"].value == 10
    assert not r["exact_i_kr"].applicable


def test_blanusa_bounds_exact_case():
    r = _by_name(blanusa_bounds(2, 2, 4))
    assert r["exact_i_kr"].value == 35
    assert r["i_and_gamma"].value == 7
    assert r["lower_i_kr"].value == 35 and r["upper_i_kr"].value == 35
    r = _by_name(blanusa_bounds(1, 1, 5))
    assert r["exact_i_kr"].value == 30


def test_blanusa_bounds_small_k():
    r = _by_name(blanusa_bounds(1, 1, 1))
    assert not r["upper_i_kr"].applicable
    assert r["lower_i_kr"].applicable  # generic degree bound only
    assert r["lower_i_kr"].provenance == "lower:degree-ratio"
    with pytest.raises(BadParameters):
        blanusa_bounds(3, 1, 2)


def test_blanusa_exactness_sandwich():
    # in the exact cases the lower and upper reports coincide
    for t, i, k in [(2, 1, 4), (2, 4, 6), (1, 2, 5), (1, 1, 4)]:
        r = _by_name(blanusa_bounds(t, i, k))
        assert r["lower_i_kr"].value == r["upper_i_kr"].value == r["exact_i_kr"].value


def test_loupekine_bounds_values():
    r = _by_name(loupekine_bounds(5, 1, 4, "LP0"))
    assert r["upper_i_kr"].value == 53
    assert r["lower_i_kr"].value == 46
    assert r["upper_gamma_kr"].value == 50
    assert r["lower_gamma"].value == 36 // 4 + 1
    r = _by_name(loupekine_bounds(5, 1, 4, "LP1"))
    assert r["upper_i_kr"].value == 54
    r = _by_name(loupekine_bounds(3, 1, 1, "LP0"))
    assert r["upper_i_kr"].value == 12


def test_loupekine_bounds_parameters():
    with pytest.raises(BadParameters):
        loupekine_bounds(3, 3, 2)
    with pytest.raises(BadParameters):
        loupekine_bounds(6, 1, 2)
    with pytest.raises(BadParameters):
        loupekine_bounds(5, 2, 2)


def test_loupekine_lower_never_exceeds_upper():
    for ell in (3, 5, 7, 9, 11):
        for sigma in range(1, ell // 3 + 1, 2):
            for k in range(4, 9):
                r = _by_name(loupekine_bounds(ell, sigma, k, "LP0"))
                assert r["lower_i_kr"].value <= r["upper_i_kr"].value


def test_bound_report_serialization():
    r = BoundReport("x", 5, True, "why", "lower:test")
    assert r.to_csv_row() == ["x", "5", "true", "lower:test"]
    assert r.to_json_dict()["value"] == 5
    assert CSV_HEADER[0] == "bound_name"
    with pytest.raises(BadParameters):
        BoundReport("x", 5, False, "why", "lower:test")
