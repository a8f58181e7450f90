"""Figure rendering for the report paths of the CLI.

Figures are saved to files next to the delimited output; nothing here
participates in any certified computation (plots use plain floats).
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .search import GrowthReport, SearchReport
from .sequences import kbonacci_range


def plot_search(report: SearchReport, path: str) -> None:
    """Scatter of solution pairs (n, m) found in the scanned range."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [s.n for s in report.solutions]
    ms = [s.m for s in report.solutions]
    ax.scatter(ns, ms, color="tab:blue", zorder=3)
    for s in report.solutions:
        ax.annotate(f"({s.n},{s.m})", (s.n, s.m), textcoords="offset points", xytext=(5, 4))
    ax.set_xlabel("window start n")
    ax.set_ylabel("Fibonacci index m")
    ax.set_title(
        f"Window sums hitting Fibonacci numbers (k={report.k}, d={report.d}, "
        f"n <= {report.n_max})"
    )
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_mod25(scan: list[tuple[int, int]], path: str) -> None:
    """Residues mod 25 of the norm determinant, by recurrence order."""
    fig, ax = plt.subplots(figsize=(8, 4))
    ks = [k for k, _ in scan]
    rs = [r for _, r in scan]
    colors = ["tab:red" if k % 5 == 1 else "tab:blue" for k in ks]
    ax.bar(ks, rs, color=colors, width=0.8)
    ax.set_xlabel("recurrence order k")
    ax.set_ylabel("residue mod 25")
    ax.set_title("Norm determinant residues mod 25 (red: k = 1 mod 5)")
    ax.axhline(0, color="black", linewidth=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_growth(report: GrowthReport, path: str) -> None:
    """Log-scale view of the terms against the dominant-root envelope."""
    k, n_max = report.k, report.n_max
    ns = list(range(2, n_max + 1))
    terms = kbonacci_range(k, 2, n_max)
    logs = [math.log(t) if t > 0 else float("nan") for t in terms]
    # display-only float approximation of the dominant root
    from .roots import all_roots

    alpha = float(all_roots(k, report.precision_bits).dominant.mid)
    lo = [(n - 2) * math.log(alpha) for n in ns]
    hi = [(n - 1) * math.log(alpha) for n in ns]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, logs, label=f"ln F_n (k={k})", color="tab:blue")
    ax.fill_between(ns, lo, hi, color="tab:orange", alpha=0.3, label="dominant-root envelope")
    ax.set_xlabel("n")
    ax.set_ylabel("natural log")
    ax.set_title(f"Growth envelope, k={k}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
