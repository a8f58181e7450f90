"""Exhaustive desk-scale enumeration and verification.

Finds every (n, m) with F_n^(k) + ... + F_(n+d)^(k) = F_m in an index
rectangle, verifies the complete k = 2 characterization including the
strict sandwich between consecutive Fibonacci numbers, and checks the
certified growth envelope of the k-step terms.  All enumeration is exact
integer arithmetic; parallel partitioned runs are deterministic and
merge to the same report as a sequential run.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .balls import DEFAULT_PREC, RealBall
from .bounds import BoundReport
from .roots import all_roots
from .sequences import FibonacciWalker, fibonacci, kbonacci_range, window_sum


@dataclass(frozen=True, order=True)
class Solution:
    """One solved instance: the window at n sums to the m-th Fibonacci number."""

    n: int
    m: int
    k: int
    d: int
    value: int

    def revalidate(self) -> bool:
        """Recompute both sides from scratch."""
        return window_sum(self.k, self.n, self.d) == fibonacci(self.m) == self.value


@dataclass(frozen=True)
class SearchReport:
    k: int
    d: int
    n_max: int
    solutions: tuple[Solution, ...]
    scanned_count: int
    elapsed: float
    partition_count: int

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "n_max": self.n_max,
            "partition_count": self.partition_count,
            "scanned_count": self.scanned_count,
            "solutions": [
                {"d": str(s.d), "k": str(s.k), "m": str(s.m), "n": str(s.n), "value": str(s.value)}
                for s in self.solutions
            ],
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["k", "d", "n", "m", "value"]]
        for s in self.solutions:
            rows.append([str(s.k), str(s.d), str(s.n), str(s.m), str(s.value)])
        return rows


def _scan_range(k: int, d: int, n_lo: int, n_hi: int) -> tuple[list[Solution], int]:
    """Solutions with n_lo <= n <= n_hi, windows summed incrementally."""
    if n_hi < n_lo:
        return [], 0
    terms = kbonacci_range(k, n_lo, n_hi + d)
    window_total = sum(terms[: d + 1])
    walker = FibonacciWalker()
    out: list[Solution] = []
    scanned = 0
    for i, n in enumerate(range(n_lo, n_hi + 1)):
        scanned += 1
        for m in sorted(walker.indices_of(window_total)):
            out.append(Solution(n=n, m=m, k=k, d=d, value=window_total))
        if i + d + 1 < len(terms):
            window_total += terms[i + d + 1] - terms[i]
    return out, scanned


def find_solutions(
    k: int,
    d: int,
    n_max: int,
    partitions: int = 1,
    threads: int = 1,
) -> SearchReport:
    """All solutions with -(k-2) <= n <= n_max, every matching m reported.

    The window value 1 matches two Fibonacci indices; both appear.  With
    partitions > 1 the range splits into contiguous chunks, each seeded
    independently, and results merge by sorted concatenation.
    """
    n_lo = -(k - 2)
    if n_max < n_lo:
        raise ValueError(f"n_max must be >= {n_lo}")
    if partitions < 1 or threads < 1:
        raise ValueError("partitions and threads must be >= 1")
    start = time.monotonic()
    total = n_max - n_lo + 1
    partitions = min(partitions, total)
    bounds = [n_lo + (total * i) // partitions for i in range(partitions)] + [n_max + 1]
    chunks = [(bounds[i], bounds[i + 1] - 1) for i in range(partitions)]
    if threads > 1 and partitions > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: _scan_range(k, d, c[0], c[1]), chunks))
    else:
        parts = [_scan_range(k, d, lo, hi) for lo, hi in chunks]
    solutions: list[Solution] = []
    scanned = 0
    for sols, count in parts:
        solutions.extend(sols)
        scanned += count
    solutions.sort(key=lambda s: (s.n, s.m))
    return SearchReport(
        k=k,
        d=d,
        n_max=n_max,
        solutions=tuple(solutions),
        scanned_count=scanned,
        elapsed=time.monotonic() - start,
        partition_count=partitions,
    )


def intersection_scan(k: int, n_max: int) -> set[int]:
    """Values of the order-k sequence up to index n_max that are Fibonacci."""
    if k < 3:
        raise ValueError("intersection scan is for orders k >= 3")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    walker = FibonacciWalker()
    hits: set[int] = set()
    for v in kbonacci_range(k, -(k - 2), n_max):
        if walker.indices_of(v):
            hits.add(v)
    return hits


@dataclass(frozen=True)
class K2Report:
    """Exhaustive confirmation of the complete k = 2 characterization."""

    d_max: int
    n_max: int
    checked: int
    characterization_failures: tuple[tuple[int, int], ...]
    sandwich_failures: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.characterization_failures and not self.sandwich_failures


def verify_prop_k2(d_max: int, n_max: int) -> K2Report:
    """Check: solutions exist iff d in {0, 1} (any n) or (d, n) = (2, 0).

    Additionally certifies the proof mechanism for n >= 1, d >= 2: the
    window sum lies strictly between F_(n+d+1) and F_(n+d+2).
    """
    if d_max < 2 or n_max < 1:
        raise ValueError("need d_max >= 2 and n_max >= 1")
    fib = [fibonacci(i) for i in range(n_max + d_max + 3)]
    fibset = set(fib)
    char_failures = []
    sandwich_failures = []
    checked = 0
    for d in range(d_max + 1):
        # telescoped window: F(n)+...+F(n+d) = F(n+d+2) - F(n+1)
        for n in range(n_max + 1):
            checked += 1
            s = fib[n + d + 2] - fib[n + 1]
            expected = d in (0, 1) or (d == 2 and n == 0)
            if (s in fibset) != expected:
                char_failures.append((d, n))
            if n >= 1 and d >= 2:
                if not (fib[n + d + 1] < s < fib[n + d + 2]):
                    sandwich_failures.append((d, n))
    return K2Report(
        d_max=d_max,
        n_max=n_max,
        checked=checked,
        characterization_failures=tuple(char_failures),
        sandwich_failures=tuple(sandwich_failures),
    )


@dataclass(frozen=True)
class GrowthReport:
    """Certified growth envelope results for one order k."""

    k: int
    n_max: int
    precision_bits: int
    lower_failures: tuple[int, ...]   # alpha^(n-2) <= F_n
    upper_failures: tuple[int, ...]   # F_n <= alpha^(n-1)
    power_of_two_failures: tuple[int, ...]  # F_n <= 2^(n-1)

    @property
    def ok(self) -> bool:
        return not (self.lower_failures or self.upper_failures or self.power_of_two_failures)


def verify_growth(k: int, n_max: int, precision_bits: int = DEFAULT_PREC) -> GrowthReport:
    """Interval-certified check of the dominant-root growth envelope.

    A pass proves the inequalities at these indices: the dominant-root
    powers are outward-rounded balls and comparisons use their far edges.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    dom = all_roots(k, precision_bits).dominant
    terms = kbonacci_range(k, 1, n_max)
    lower_failures = []
    upper_failures = []
    pow2_failures = []
    power = RealBall.exact_int(1, precision_bits)  # dom^(n-2) for n = 2
    for n in range(1, n_max + 1):
        f_n = terms[n - 1]
        if f_n > 2 ** (n - 1):
            pow2_failures.append(n)
        if n >= 2:
            f_ball = RealBall.exact_int(f_n, precision_bits)
            if not (f_ball - power).lower() >= 0:
                lower_failures.append(n)
            if not ((power * dom) - f_ball).lower() >= 0:
                upper_failures.append(n)
            power = power * dom
    return GrowthReport(
        k=k,
        n_max=n_max,
        precision_bits=precision_bits,
        lower_failures=tuple(lower_failures),
        upper_failures=tuple(upper_failures),
        power_of_two_failures=tuple(pow2_failures),
    )


def bound_consistency(k: int, d: int, n_max: int, report: BoundReport) -> bool:
    """Every desk-scale solution respects the derived thresholds N and M."""
    if report.k != k or report.d != d:
        raise ValueError("report was derived for different parameters")
    found = find_solutions(k, d, n_max)
    return all(s.n < report.N and s.m < report.M for s in found.solutions)
