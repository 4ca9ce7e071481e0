"""Seeded random instances for self-checks and tests."""

from __future__ import annotations

import math

import numpy as np

from .frames import Frame, is_irreducible
from .geometry import ConvexPolygon, polygon_from_edges


def random_convex_polygon(rng: np.random.Generator, m: int) -> ConvexPolygon:
    """Strictly convex m-gon: random lengths on sorted angles, re-centered."""
    for _ in range(64):
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, m))
        lengths = rng.uniform(0.2, 2.0, m)
        edges = np.stack([lengths * np.cos(angles), lengths * np.sin(angles)], axis=1)
        edges -= edges.mean(axis=0)
        try:
            return polygon_from_edges([tuple(e) for e in edges])
        except ValueError:
            continue
    raise RuntimeError(f"failed to sample a convex {m}-gon")


def random_unit_edges(rng: np.random.Generator, m: int) -> list[tuple[float, float]]:
    angles = rng.uniform(0.0, 2.0 * math.pi, m)
    return [(math.cos(a), math.sin(a)) for a in angles]


def random_frame(rng: np.random.Generator, m: int) -> Frame:
    """Gaussian frame; almost surely full rank and not tight."""
    return Frame(tuple(map(tuple, rng.normal(size=(m, 2)))))


def random_tight_frame(rng: np.random.Generator, m: int) -> Frame:
    """Tight irreducible frame from the orthonormal factor of a random matrix."""
    for _ in range(64):
        q, _ = np.linalg.qr(rng.normal(size=(m, 2)))
        scale = rng.uniform(0.5, 2.0)
        frame = Frame(tuple(map(tuple, scale * q)))
        if is_irreducible(frame):
            return frame
    raise RuntimeError(f"failed to sample a tight irreducible frame with m={m}")
