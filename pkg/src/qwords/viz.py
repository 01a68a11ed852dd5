"""Render automata to image files with matplotlib."""

from __future__ import annotations

import math
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Circle, FancyArrowPatch

from .langs import Dfa


def render_dfa(dfa: Dfa, path: str, title: str | None = None) -> None:
    """Draw the DFA on a circular layout and save the figure to path.

    Final states get a double circle; parallel edges between the same pair
    of states are merged into one arrow with a combined label.
    """
    n = len(dfa.transitions)
    radius = max(2.0, 0.45 * n)
    positions = {
        s: (radius * math.cos(2 * math.pi * s / n), radius * math.sin(2 * math.pi * s / n))
        for s in dfa.states
    }
    node_r = 0.28 + 0.02 * min(n, 10)

    fig, ax = plt.subplots(figsize=(8, 8))
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)

    labels: dict[tuple[int, int], list[str]] = defaultdict(list)
    for s in dfa.states:
        for a in dfa.alphabet:
            labels[(s, dfa.transitions[s][a])].append(a)

    for (s, t), letters in labels.items():
        text = ",".join(letters)
        x1, y1 = positions[s]
        if s == t:
            norm = math.hypot(x1, y1) or 1.0
            lx, ly = x1 / norm, y1 / norm
            loop = Circle((x1 + lx * node_r * 1.4, y1 + ly * node_r * 1.4), node_r * 0.8,
                          fill=False, color="gray")
            ax.add_patch(loop)
            ax.text(x1 + lx * node_r * 2.8, y1 + ly * node_r * 2.8, text,
                    ha="center", va="center", fontsize=8, color="darkred")
            continue
        x2, y2 = positions[t]
        arrow = FancyArrowPatch(
            (x1, y1), (x2, y2),
            connectionstyle="arc3,rad=0.15",
            arrowstyle="-|>", mutation_scale=12, color="gray",
            shrinkA=node_r * 36, shrinkB=node_r * 36,
        )
        ax.add_patch(arrow)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        ax.text(mx - dy / norm * 0.35, my + dx / norm * 0.35, text,
                ha="center", va="center", fontsize=8, color="darkred")

    for s, (x, y) in positions.items():
        ax.add_patch(Circle((x, y), node_r, fill=True, facecolor="white", edgecolor="black"))
        if s in dfa.finals:
            ax.add_patch(Circle((x, y), node_r * 0.8, fill=False, edgecolor="black"))
        ax.text(x, y, str(s), ha="center", va="center", fontsize=9)

    sx, sy = positions[dfa.initial]
    norm = math.hypot(sx, sy) or 1.0
    ax.annotate("", xy=(sx - sx / norm * node_r, sy - sy / norm * node_r),
                xytext=(sx - sx / norm * node_r * 3, sy - sy / norm * node_r * 3),
                arrowprops=dict(arrowstyle="-|>", color="black"))

    ax.relim()
    ax.autoscale_view()
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
