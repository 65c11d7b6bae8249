"""Matplotlib renderings of the report tables, written next to the CSVs."""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = [
    "render_count_figure",
    "render_sum_figure",
    "render_tail_figure",
    "render_apoints_figure",
]

_DPI = 150


def render_count_figure(reports, path):
    """Computed counts vs the leading-order formula, with the discrepancy
    over log T in a second panel."""
    ts = [r.T for r in reports]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
    ax1.plot(ts, [r.computed_count for r in reports], "o-", label="winding count")
    ax1.plot(ts, [r.main_term for r in reports], "s--", label="main term")
    ax1.set_ylabel("a-points up to T")
    ax1.legend()
    ax1.grid(alpha=0.3)
    ax2.plot(ts, [r.discrepancy_over_logT for r in reports], "o-")
    ax2.axhline(0.0, color="k", lw=0.8)
    ax2.set_xlabel("T")
    ax2.set_ylabel("(count - main) / log T")
    ax2.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_sum_figure(reports, path):
    ts = [r.T for r in reports]
    tlogt = [r.T * max(1e-9, math.log(r.T)) for r in reports]
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(ts, [r.sum_half / d for r, d in zip(reports, tlogt)], "o-",
            label="sum(beta - 1/2) / (T log T)")
    ax.plot(ts, [abs(r.sum_crit) / d for r, d in zip(reports, tlogt)], "s-",
            label="|sum(beta - r/2A)| / (T log T)")
    ax.plot(ts, [r.predicted_half / d for r, d in zip(reports, tlogt)], "k--",
            label="predicted (r - A)/2")
    ax.set_xlabel("T")
    ax.set_ylabel("scaled weighted sums")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_tail_figure(reports, path):
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot([r.delta for r in reports], [r.tail_count for r in reports], "o-")
    ax.set_xlabel("delta")
    ax.set_ylabel("points with beta > y3 + delta")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_apoints_figure(apoints, path, title=""):
    fig, ax = plt.subplots(figsize=(6, 8))
    ax.scatter([p.beta for p in apoints], [p.gamma for p in apoints],
               s=9, alpha=0.7)
    ax.set_xlabel("beta")
    ax.set_ylabel("gamma")
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
