"""Figures for indecomposability tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_COLORS = {"proven": "#2b7a3d", "inconclusive": "#c0392b"}


def plot_table(rows: list[dict], path: str, title: str | None = None) -> None:
    """Scatter of (n, m) cells coloured by verdict and labelled with the degree."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for verdict, color in _COLORS.items():
        pts = [r for r in rows if r["verdict"] == verdict]
        if pts:
            ax.scatter(
                [r["n"] for r in pts],
                [r["m"] for r in pts],
                s=260,
                c=color,
                marker="s",
                label=verdict,
            )
    for r in rows:
        ax.annotate(
            str(r["degree"]),
            (r["n"], r["m"]),
            ha="center",
            va="center",
            color="white",
            fontsize=8,
        )
    ax.set_xlabel("n")
    ax.set_ylabel("m")
    if rows:
        ax.set_xticks(sorted({r["n"] for r in rows}))
        ax.set_yticks(sorted({r["m"] for r in rows}))
        ax.legend(loc="upper left", frameon=False)
    else:
        ax.text(0.5, 0.5, "no feasible rows", ha="center", va="center", transform=ax.transAxes)
    ax.set_title(title or "indecomposability certificates (cell label = degree)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_family(rows: list[dict], path: str) -> None:
    """One bar per family member: the certificate index k, or zero if none fired."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    labels = [f"j={i + 1}" for i in range(len(rows))]
    heights = [r["k"] or 0 for r in rows]
    colors = [_COLORS[r["verdict"]] for r in rows]
    ax.bar(labels, heights, color=colors)
    for x, r in enumerate(rows):
        ax.text(x, (r["k"] or 0) + 0.3, r["kind"] or "none", ha="center", fontsize=8)
    ax.set_ylabel("certificate k")
    if rows:
        ax.set_title(f"family for H({rows[0]['m']},{rows[0]['n']}), rank {rows[0]['rank']}, degree {rows[0]['degree']}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
