"""Matplotlib renderings: crystal graphs and identity-report charts.

matplotlib is imported lazily with the Agg backend so the rest of the
library never pays for it; every function writes a file and returns the
path.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


_EDGE_COLORS = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f",
)


def crystal_figure(lie, depth, path):
    """Draw the crystal graph down to the given depth, one layer per depth."""
    from . import tableaux

    plt = _pyplot()
    nodes, edges = tableaux.crystal_graph(lie, depth)
    layers = {}
    for tab, d in nodes.items():
        layers.setdefault(d, []).append(tab)
    for row in layers.values():
        row.sort(key=tableaux.reduced_text)
    pos = {}
    widest = max(len(row) for row in layers.values())
    for d, row in layers.items():
        for k, tab in enumerate(row):
            pos[tab] = ((k + 0.5) / len(row) * widest, -d)
    fig, ax = plt.subplots(figsize=(max(6, 1.6 * widest), max(4, 1.3 * (depth + 1))))
    for a, i, b in edges:
        (x0, y0), (x1, y1) = pos[a], pos[b]
        color = _EDGE_COLORS[(i - 1) % len(_EDGE_COLORS)]
        ax.annotate(
            "",
            xy=(x1, y1 + 0.12),
            xytext=(x0, y0 - 0.12),
            arrowprops={"arrowstyle": "-|>", "color": color, "lw": 1.2},
        )
        ax.text(
            (x0 + x1) / 2,
            (y0 + y1) / 2,
            str(i),
            color=color,
            fontsize=9,
            ha="center",
            va="center",
            bbox={"boxstyle": "round,pad=0.1", "fc": "white", "ec": "none"},
        )
    for tab, (x, y) in pos.items():
        ax.text(
            x,
            y,
            tableaux.reduced_text(tab),
            ha="center",
            va="center",
            fontsize=9,
            family="monospace",
            bbox={"boxstyle": "round,pad=0.3", "fc": "#f2f2f2", "ec": "#555555"},
        )
    ax.set_title(f"{lie} crystal graph, depth <= {depth}")
    ax.set_axis_off()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def gk_figure(report, path):
    """Stacked bars: tableau counts per weight height, split by segment count."""
    plt = _pyplot()
    by_height = {}
    max_seg = 0
    for entry in report.entries:
        row = by_height.setdefault(entry.height, {})
        for d, n in enumerate(entry.seg_counts):
            if n:
                row[d] = row.get(d, 0) + n
                max_seg = max(max_seg, d)
    heights = sorted(by_height)
    fig, ax = plt.subplots(figsize=(max(6, 0.8 * len(heights) + 3), 4.5))
    bottoms = [0] * len(heights)
    for d in range(max_seg + 1):
        vals = [by_height[h].get(d, 0) for h in heights]
        if not any(vals):
            continue
        color = _EDGE_COLORS[d % len(_EDGE_COLORS)]
        ax.bar(heights, vals, bottom=bottoms, color=color, label=f"seg = {d}")
        bottoms = [b + v for b, v in zip(bottoms, vals)]
    status = "verified" if report.equal else "MISMATCH"
    ax.set_title(f"{report.lie} identity to height {report.bound}: {status}")
    ax.set_xlabel("height of mu")
    ax.set_ylabel("tableaux of weight -mu")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
