"""Matplotlib rendering of polygons, frames, and bound tables to files."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .frames import Frame
from .geometry import ConvexPolygon


def save_polygon_figure(polygon: ConvexPolygon, path: str, title: str = "") -> None:
    """Draw the polygon with its diameter chords dashed."""
    fig, ax = plt.subplots(figsize=(6, 6))
    pts = np.asarray(polygon.vertices + (polygon.vertices[0],))
    ax.plot(pts[:, 0], pts[:, 1], "-o", color="#1f4e79", markersize=4, linewidth=1.6)
    for i, j in polygon.diameter_pairs():
        xi, yi = polygon.vertices[i]
        xj, yj = polygon.vertices[j]
        ax.plot([xi, xj], [yi, yj], "--", color="#c44e52", linewidth=1.2)
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_frame_figure(frame: Frame, path: str, title: str = "") -> None:
    """Draw frame vectors as arrows from the origin, unit circle dashed."""
    fig, ax = plt.subplots(figsize=(6, 6))
    circle = np.linspace(0.0, 2.0 * np.pi, 256)
    ax.plot(np.cos(circle), np.sin(circle), "--", color="0.7", linewidth=0.8)
    for x, y in frame.vectors:
        ax.annotate(
            "",
            xy=(x, y),
            xytext=(0.0, 0.0),
            arrowprops={"arrowstyle": "->", "color": "#1f4e79", "linewidth": 1.6},
        )
    lim = 1.15 * max(1.0, max(abs(c) for v in frame.vectors for c in v))
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bounds_figure(rows: Sequence[dict], path: str) -> None:
    """Plot the minimal and harmonic condition numbers against m."""
    ms = [row["m"] for row in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(
        ms,
        [row["beta_floor"] for row in rows],
        "o-",
        color="#1f4e79",
        label="lower bound on beta",
    )
    ax.plot(
        ms,
        [row["beta_harmonic"] for row in rows],
        "s--",
        color="#c44e52",
        label="harmonic frame beta",
    )
    attained = [row["m"] for row in rows if row["classes"] > 0]
    floor = {row["m"]: row["beta_floor"] for row in rows}
    ax.plot(
        attained,
        [floor[m] for m in attained],
        "o",
        color="#2ca02c",
        markersize=10,
        markerfacecolor="none",
        label="bound attained",
    )
    ax.set_xlabel("number of frame vectors m")
    ax.set_ylabel("condition number")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
