"""Exhaustive solution scans and cross-module verification."""

import json

from hypothesis import given, settings
from hypothesis import strategies as st

from fibsum.bounds import derive_bounds
from fibsum.search import (
    bound_consistency,
    find_solutions,
    intersection_scan,
    verify_growth,
    verify_prop_k2,
)
from fibsum.sequences import fib_index_of, k2_window_closed_form, window_sum


def pairs(report):
    return [(s.n, s.m) for s in report.solutions]


def test_known_solution_list_k3_d1():
    report = find_solutions(3, 1, 500)
    assert pairs(report) == [(-1, 0), (0, 1), (0, 2), (1, 3), (2, 4)]
    assert report.scanned_count == 502


def test_solutions_revalidate():
    for k, d in [(3, 1), (3, 3), (5, 2), (2, 0)]:
        for s in find_solutions(k, d, 300).solutions:
            assert s.revalidate()
            assert window_sum(k, s.n, d) == s.value
            assert s.m in fib_index_of(s.value)


def test_larger_scan_is_superset():
    small = pairs(find_solutions(3, 1, 200))
    large = pairs(find_solutions(3, 1, 500))
    assert set(small) <= set(large)
    assert [p for p in large if p[0] <= 200] == small


@given(st.integers(2, 6), st.integers(0, 4), st.integers(2, 8))
@settings(max_examples=25, deadline=None)
def test_partitioned_equals_sequential(k, d, parts):
    seq = find_solutions(k, d, 150)
    par = find_solutions(k, d, 150, partitions=parts, threads=min(parts, 4))
    assert pairs(par) == pairs(seq)
    assert par.scanned_count == seq.scanned_count
    assert par.partition_count == parts


def test_multi_term_hits():
    assert (1, 6) in pairs(find_solutions(3, 3, 300))
    assert (5, 10) in pairs(find_solutions(5, 2, 300))


def test_intersections():
    assert intersection_scan(3, 500) == {0, 1, 2, 13}
    assert intersection_scan(4, 500) == {0, 1, 2, 8}
    assert intersection_scan(9, 500) == {0, 1, 2, 8}


def test_k2_characterization():
    report = verify_prop_k2(10, 200)
    assert report.ok
    assert report.characterization_failures == ()
    assert report.sandwich_failures == ()


def test_k2_search_agrees_with_characterization():
    for d in range(0, 6):
        found = {s.n for s in find_solutions(2, d, 120).solutions if s.n >= 0}
        if d in (0, 1):
            assert found == set(range(0, 121))
        elif d == 2:
            assert found == {0}
        else:
            assert found == set()


def test_k2_window_closed_form_on_solutions():
    for s in find_solutions(2, 1, 100).solutions:
        if s.n >= 0:
            assert k2_window_closed_form(s.n, 1) == s.value


def test_growth_certified():
    for k in (2, 3, 10):
        report = verify_growth(k, 200, 192)
        assert report.ok


def test_bound_consistency_cross_module():
    for k, d in [(3, 1), (4, 0), (5, 2)]:
        report = derive_bounds(k, d, 256)
        assert bound_consistency(k, d, 500, report)


def test_report_serialization_shapes():
    report = find_solutions(3, 1, 500)
    payload = report.to_json_dict()
    text = json.dumps(payload, sort_keys=True)
    assert json.loads(text) == payload
    rows = report.csv_rows()
    assert rows[0] == ["k", "d", "n", "m", "value"]
    assert len(rows) == 1 + len(report.solutions)
    assert rows[1] == ["3", "1", "-1", "0", "0"]
