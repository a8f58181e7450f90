"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Each criterion has a wall-clock budget; the budget is part of the
criterion and is asserted, not just reported.
"""

import time

from fibsum.bounds import derive_bounds, threshold_search
from fibsum.balls import RealBall
from fibsum.bounds import _inequality_value
from fibsum.example_repro import reproduce_example_3_4
from fibsum.intpoly import (
    delta_closed_form,
    delta_recursion,
    mod25_flagged,
    mod25_scan,
    norm_linear_resultant,
    padic_val,
    periodicity_check,
)
from fibsum.roots import binet_int
from fibsum.search import (
    bound_consistency,
    find_solutions,
    intersection_scan,
    verify_growth,
    verify_prop_k2,
)
from fibsum.sequences import fibonacci, kbonacci, window_sum


class _Criterion:
    """Context manager asserting the budget and printing the verdict line."""

    def __init__(self, number, label, budget_s):
        self.number = number
        self.label = label
        self.budget_s = budget_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        verdict = "PASS" if exc_type is None and elapsed < self.budget_s else "FAIL"
        print(
            f"criterion {self.number:2d} [{verdict}] {self.label} "
            f"({elapsed:.2f}s / budget {self.budget_s:.0f}s)"
        )
        if exc_type is None:
            assert elapsed < self.budget_s, (
                f"criterion {self.number} exceeded budget: {elapsed:.2f}s"
            )
        return False


def test_criterion_01_sequence_golden_set():
    with _Criterion(1, "sequence golden set and worked identities", 1):
        assert kbonacci(3, 6) == 13
        assert kbonacci(3, 7) == 24
        assert [kbonacci(5, n) for n in (5, 6, 7)] == [8, 16, 31]
        # worked window identities for the order-3 and order-5 sequences
        assert window_sum(3, -1, 1) == fibonacci(0)
        assert window_sum(3, 0, 1) == fibonacci(1)
        assert window_sum(3, 0, 1) == fibonacci(2)
        assert window_sum(3, 1, 1) == fibonacci(3)
        assert window_sum(3, 2, 1) == fibonacci(4)
        assert window_sum(3, 1, 3) == fibonacci(6)
        assert window_sum(5, 5, 2) == fibonacci(10)


def test_criterion_02_order_two_characterization():
    with _Criterion(2, "order-2 window characterization and sandwich", 5):
        report = verify_prop_k2(10, 200)
        assert report.ok
        assert report.characterization_failures == ()
        assert report.sandwich_failures == ()


def test_criterion_03_norm_three_way_oracle():
    with _Criterion(3, "norm determinant three-way oracle, k in [2, 30]", 10):
        assert delta_closed_form(2) == -5
        assert delta_closed_form(3) == -88
        for k in range(2, 31):
            closed = delta_closed_form(k)
            assert delta_recursion(k) == (-1) ** k * closed
            assert norm_linear_resultant(k) == (-1) ** k * closed


def test_criterion_04_mod25_and_valuation_scans():
    with _Criterion(4, "mod-25 scan, periodicity, 5-adic valuation", 30):
        scan = mod25_scan(2, 100)
        assert mod25_flagged(scan) == []
        for k, residue in scan:
            if k % 5 != 1:
                assert residue != 0
        for k in range(2, 101):
            assert periodicity_check(k)
        for k in (6, 11, 16, 21, 26, 51, 101, 126):
            assert padic_val(5, delta_closed_form(k)) == padic_val(5, k - 1)


def test_criterion_05_power_sum_agreement():
    with _Criterion(5, "power-sum formula matches recurrence exactly", 30):
        failures = [
            (k, n)
            for k in range(2, 11)
            for n in range(1, 201)
            if binet_int(k, n, 256) != kbonacci(k, n)
        ]
        assert failures == []


def test_criterion_06_growth_envelope():
    with _Criterion(6, "certified growth envelope, k in [2, 10], n to 400", 30):
        for k in range(2, 11):
            report = verify_growth(k, 400, 256)
            assert report.ok, f"growth certification failed for k={k}"


def test_criterion_07_worked_example_constants():
    with _Criterion(7, "worked-example constants at pinned tolerances", 5):
        report = reproduce_example_3_4(256)
        failed = [c.name for c in report.checks if not c.passed]
        assert failed == [], f"failed checks: {failed}"


def test_criterion_08_threshold_reproduction():
    with _Criterion(8, "doubling threshold equals 2^63 with certified signs", 1):
        a = RealBall.from_decimal("1.46e17", 256)
        b = RealBall.from_decimal("85.53e15", 256)
        c = RealBall.from_decimal("0.78", 256)
        n = threshold_search(a, b, c)
        assert n == 9223372036854775808
        assert _inequality_value(a, b, c, n // 2).certainly_positive()
        assert _inequality_value(a, b, c, n).certainly_negative()


def test_criterion_09_search_reproduction():
    with _Criterion(9, "desk-scale search and intersection reproduction", 10):
        found = [(s.n, s.m) for s in find_solutions(3, 1, 500).solutions]
        assert found == [(-1, 0), (0, 1), (0, 2), (1, 3), (2, 4)]
        assert intersection_scan(3, 500) == {0, 1, 2, 13}
        for k in range(4, 11):
            assert intersection_scan(k, 500) == {0, 1, 2, 8}


def test_criterion_10_cross_module_soundness():
    with _Criterion(10, "derived bounds dominate every found solution", 60):
        for k, d in [(3, 1), (4, 0), (5, 2)]:
            report = derive_bounds(k, d, 256)
            assert bound_consistency(k, d, 1000, report)


def test_criterion_11_parallel_determinism():
    with _Criterion(11, "parallel and sequential searches are identical", 30):
        for k, d in [(3, 1), (2, 2), (6, 4)]:
            seq = find_solutions(k, d, 400)
            par = find_solutions(k, d, 400, partitions=5, threads=4)
            assert [(s.n, s.m, s.value) for s in par.solutions] == [
                (s.n, s.m, s.value) for s in seq.solutions
            ]
            assert par.scanned_count == seq.scanned_count
