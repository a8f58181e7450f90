"""Exact sequence arithmetic and Fibonacci membership."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsum.sequences import (
    FibonacciWalker,
    fib_index_of,
    fibonacci,
    k2_window_closed_form,
    kbonacci,
    kbonacci_range,
    window_sum,
)


def test_fibonacci_base_cases():
    assert [fibonacci(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_kbonacci_matches_fibonacci_at_order_two():
    for n in range(0, 40):
        assert kbonacci(2, n) == fibonacci(n)


def test_tribonacci_values():
    # A000073 shifted to F_1 = 1
    assert [kbonacci(3, n) for n in range(-1, 9)] == [0, 0, 1, 1, 2, 4, 7, 13, 24, 44]


def test_pentanacci_values():
    assert kbonacci(5, 5) == 8
    assert kbonacci(5, 6) == 16
    assert kbonacci(5, 7) == 31


def test_seed_block_is_zero():
    for k in range(2, 9):
        for n in range(-(k - 2), 1):
            assert kbonacci(k, n) == 0
        assert kbonacci(k, 1) == 1


def test_domain_errors():
    with pytest.raises(ValueError):
        kbonacci(1, 3)
    with pytest.raises(ValueError):
        kbonacci(4, -3)


@given(st.integers(2, 8), st.integers(10, 60))
@settings(max_examples=60, deadline=None)
def test_recurrence_holds(k, n):
    assert kbonacci(k, n) == sum(kbonacci(k, n - j) for j in range(1, k + 1))


@given(st.integers(2, 7), st.integers(-3, 30), st.integers(25, 80))
@settings(max_examples=60, deadline=None)
def test_range_agrees_with_pointwise(k, n_lo, n_hi):
    n_lo = max(n_lo, -(k - 2))
    assert kbonacci_range(k, n_lo, n_hi) == [kbonacci(k, n) for n in range(n_lo, n_hi + 1)]


@given(st.integers(0, 80), st.integers(0, 8))
@settings(max_examples=80, deadline=None)
def test_k2_window_closed_form_matches_sum(n, d):
    assert window_sum(2, n, d) == k2_window_closed_form(n, d)


def test_window_sum_direct():
    # 1 + 1 + 2 + 4 = 8 for the order-3 sequence
    assert window_sum(3, 1, 3) == 8


def test_fib_index_of_small_values():
    assert fib_index_of(0) == {0}
    assert fib_index_of(1) == {1, 2}
    assert fib_index_of(2) == {3}
    assert fib_index_of(13) == {7}
    assert fib_index_of(4) == set()
    with pytest.raises(ValueError):
        fib_index_of(-5)


def test_walker_matches_fib_index_of():
    walker = FibonacciWalker()
    for x in range(0, 1000):
        assert walker.indices_of(x) == fib_index_of(x)


def test_walker_restarts_on_decrease():
    walker = FibonacciWalker()
    assert walker.indices_of(55) == {10}
    assert walker.indices_of(3) == {4}
