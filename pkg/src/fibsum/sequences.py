"""Exact integer arithmetic for Fibonacci and k-step Fibonacci sequences.

The k-step sequence sums its previous k terms and is seeded with k - 1
zeros (at indices -(k-2) .. 0) followed by a one at index 1.  For k = 2
this is the ordinary Fibonacci sequence.  All values are exact Python
integers; no floating point is involved anywhere in this module.
"""

from __future__ import annotations


def _check_order(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"recurrence order must be an integer >= 2, got {k!r}")


def kbonacci(k: int, n: int) -> int:
    """n-th term of the k-step Fibonacci sequence, for n >= -(k-2)."""
    _check_order(k)
    if n < -(k - 2):
        raise ValueError(f"index {n} below the sequence start -(k-2) = {-(k - 2)}")
    # Rolling window of the last k terms, seeded with the initial block.
    window = [0] * (k - 1) + [1]  # indices -(k-2) .. 1
    if n <= 1:
        return window[n + k - 2]
    for _ in range(n - 1):
        window.append(sum(window[-k:]))
        del window[0]
    return window[-1]


def fibonacci(n: int) -> int:
    """n-th Fibonacci number (F_0 = 0, F_1 = 1)."""
    if n < 0:
        raise ValueError(f"Fibonacci index must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def kbonacci_range(k: int, n_lo: int, n_hi: int) -> list[int]:
    """Exact terms for indices n_lo .. n_hi inclusive (n_lo >= -(k-2))."""
    _check_order(k)
    if n_lo < -(k - 2):
        raise ValueError(f"index {n_lo} below the sequence start -(k-2) = {-(k - 2)}")
    if n_hi < n_lo:
        return []
    terms = [0] * (k - 1) + [1]  # indices -(k-2) .. 1
    while len(terms) < n_hi + k - 1:
        terms.append(sum(terms[-k:]))
    lo = n_lo + k - 2
    return terms[lo : n_hi + k - 1]


def window_sum(k: int, n: int, d: int) -> int:
    """Exact sum of the d+1 consecutive k-step terms starting at index n."""
    if d < 0:
        raise ValueError(f"window length parameter must be >= 0, got {d}")
    return sum(kbonacci_range(k, n, n + d))


def k2_window_closed_form(n: int, d: int) -> int:
    """Telescoped form of a Fibonacci window sum: F_{n+d+2} - F_{n+1}."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be >= 0")
    return fibonacci(n + d + 2) - fibonacci(n + 1)


class FibonacciWalker:
    """Monotone walk along the Fibonacci sequence for membership queries.

    Designed for nondecreasing query streams: each query advances an
    internal pointer, so a full scan is linear overall.  Out-of-order
    queries restart the walk and remain correct, just slower.
    """

    def __init__(self) -> None:
        self._idx = 2  # smallest index with strictly increasing values
        self._val = 1  # F_2
        self._nxt = 2  # F_3

    def indices_of(self, x: int) -> set[int]:
        """All m >= 0 with F_m == x (empty set when x is not Fibonacci)."""
        if x < 0:
            raise ValueError(f"value must be >= 0, got {x}")
        if x == 0:
            return {0}
        if x == 1:
            return {1, 2}
        if x < self._val:
            self._idx, self._val, self._nxt = 2, 1, 2
        while self._val < x:
            self._idx += 1
            self._val, self._nxt = self._nxt, self._val + self._nxt
        return {self._idx} if self._val == x else set()


def fib_index_of(x: int) -> set[int]:
    """All m >= 0 with F_m == x; {1, 2} for x = 1, empty when not Fibonacci."""
    return FibonacciWalker().indices_of(x)
