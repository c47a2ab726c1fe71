"""Figure rendering for the report command.

Each function writes one PNG and returns the path.  Matplotlib is imported
lazily with the Agg backend so library use never needs a display.
"""

from __future__ import annotations

import math
from pathlib import Path


def _plt():
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    return plt


def valuation_profile_figure(path, n: int, k: int) -> Path:
    """Bar chart of v2 over the window n..n+k with the unique maximum marked."""
    from .numtheory import kurschak_certificate, v2

    plt = _plt()
    cert = kurschak_certificate(n, k)
    xs = list(range(n, n + k + 1))
    vals = [v2(x) for x in xs]
    colors = ["tab:red" if i == cert.unique_index else "tab:blue" for i in range(k + 1)]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(xs, vals, color=colors)
    ax.set_xlabel("integer")
    ax.set_ylabel("2-adic valuation")
    ax.set_title(f"window [{n}, {n + k}]: unique maximum at {n + cert.unique_index}")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def harmonic_denominator_figure(path, n_max: int, k: int) -> Path:
    """Reduced denominator of the all-ones consecutive sum against n.

    An integer sum would show as a denominator of 1; the log axis makes the
    floor at 1 visible.
    """
    from .numtheory import fraction_sum

    plt = _plt()
    ns = list(range(1, n_max + 1))
    dens = [fraction_sum(n, k, [1] * (k + 1)).denominator for n in ns]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.semilogy(ns, dens, ".", markersize=4)
    ax.axhline(1.0, color="tab:red", linewidth=1, label="integer line")
    ax.set_xlabel("n")
    ax.set_ylabel(f"denominator of sum over n..n+{k}")
    ax.legend(loc="lower right")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def nagell_denominator_figure(path, m_max: int, n_max: int, k: int) -> Path:
    """Heat map of log10 of the reduced denominator over the (m, n) grid."""
    from .numtheory import nagell_sum

    plt = _plt()
    grid = [
        [math.log10(nagell_sum(m, n, k).denominator) for n in range(1, n_max + 1)]
        for m in range(1, m_max + 1)
    ]
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(
        grid, origin="lower", extent=(1, n_max, 1, m_max), aspect="auto"
    )
    fig.colorbar(im, ax=ax, label="log10 denominator")
    ax.set_xlabel("n")
    ax.set_ylabel("m")
    ax.set_title(f"progression sums, k = {k} (no cell reaches 0)")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def axiom_outcome_figure(path, checks) -> Path:
    """Horizontal bars of pass counts per axiom from a sampling run."""
    plt = _plt()
    ids = [c.axiom for c in checks]
    passed = [c.passed for c in checks]
    failed = [c.failed for c in checks]
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.barh(ids, passed, color="tab:green", label="pass")
    if any(failed):
        ax.barh(ids, failed, left=passed, color="tab:red", label="fail")
    ax.set_yticks(ids)
    ax.set_yticklabels([f"A{i}" for i in ids])
    ax.invert_yaxis()
    ax.set_xlabel("samples")
    ax.legend(loc="lower right")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
