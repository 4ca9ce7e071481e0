"""Independent brute-force and sampling oracles.

Everything here recomputes a quantity that the main modules obtain by a
smarter route, using the most literal method available: exhaustive sign
scans, pairwise distance loops, dense grid sampling.  The point is
cross-validation, so none of these functions share code with the paths
they check.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from typing import Sequence

import numpy as np

from .enumeration import MTooLarge, SignVector
from .frames import Frame
from .geometry import ConvexPolygon, Vec2

BRUTE_SIGN_CAP = 20
DISCREPANCY_CAP = 24
FLOAT_ZERO_TOL = 1e-9
UNIT_EDGE_ATOL = 1e-12


class NonUnitEdges(ValueError):
    """Discrepancy maximization requires unit edges."""


def brute_force_solutions(m: int) -> list[SignVector]:
    """All sign vectors with |sum eps_j exp(i j pi / m)| < 1e-9.

    Floating companion of the exact cyclotomic enumeration: same index
    order (bit j of the index encodes eps_{j+1}, bit 0 -> +1), no
    symmetry reduction, plain complex arithmetic.
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if m > BRUTE_SIGN_CAP:
        raise MTooLarge(f"m={m} exceeds the brute-force cap {BRUTE_SIGN_CAP}")
    zeta = cmath.exp(1j * math.pi / m)
    powers = np.array([zeta ** j for j in range(1, m + 1)])
    out: list[SignVector] = []
    step = 1 << 16
    for start in range(0, 1 << m, step):
        idx = np.arange(start, min(start + step, 1 << m), dtype=np.int64)
        signs = 1 - 2 * ((idx[:, None] >> np.arange(m, dtype=np.int64)) & 1)
        sums = signs.astype(complex) @ powers
        for row in signs[np.abs(sums) < FLOAT_ZERO_TOL]:
            out.append(tuple(int(s) for s in row))
    return out


def brute_force_diameter(polygon: ConvexPolygon) -> float:
    """Largest pairwise vertex distance, by explicit double loop."""
    vs = polygon.vertices
    best = 0.0
    for i in range(len(vs)):
        xi, yi = vs[i]
        for j in range(i + 1, len(vs)):
            d = math.hypot(vs[j][0] - xi, vs[j][1] - yi)
            if d > best:
                best = d
    return best


def discrepancy_max(edges: Sequence[Vec2]) -> float:
    """max over sign choices of ||sum_j eps_j e_j||, unit edges only.

    For unit vectors this equals the maximal absolute projection sum,
    which is how the main path computes it; here the maximum is taken by
    exhausting all 2^m sign patterns.
    """
    es = [(float(e[0]), float(e[1])) for e in edges]
    m = len(es)
    if m > DISCREPANCY_CAP:
        raise MTooLarge(f"m={m} exceeds the discrepancy cap {DISCREPANCY_CAP}")
    for e in es:
        if abs(math.hypot(*e) - 1.0) > UNIT_EDGE_ATOL:
            raise NonUnitEdges(f"edge {e} is not a unit vector")
    arr = np.asarray(es)
    best = 0.0
    step = 1 << 16
    for start in range(0, 1 << m, step):
        idx = np.arange(start, min(start + step, 1 << m), dtype=np.int64)
        signs = 1 - 2 * ((idx[:, None] >> np.arange(m, dtype=np.int64)) & 1)
        sums = signs.astype(float) @ arr
        best = max(best, float(np.sqrt((sums * sums).sum(axis=1)).max()))
    return best


@dataclasses.dataclass(frozen=True)
class SampledBounds:
    """Plain grid estimates of the Lipschitz constants.

    The sampled quotient minimum can only overshoot the true lower
    constant, and the sampled norm maximum can only undershoot the true
    upper constant, so ``lower >= L`` and ``upper <= U`` always; both
    gaps shrink as the grids refine.
    """

    lower: float
    upper: float


def sampled_lipschitz(frame: Frame, n_theta: int = 10000, n_t: int = 100) -> SampledBounds:
    """Sample the Lipschitz quotient and measurement norm on a grid."""
    if n_theta < 2 or n_t < 2:
        raise ValueError("grid must have at least 2 points per axis")
    arr = frame.as_array()
    thetas = np.linspace(0.0, math.pi, n_theta, endpoint=False)
    dirs = np.stack([np.cos(thetas), np.sin(thetas)])
    ax = np.abs(arr @ dirs)
    ay = np.abs(arr @ np.stack([-dirs[1], dirs[0]]))
    upper = float(np.sqrt((ax * ax).sum(axis=0).max()))
    lower = math.inf
    for t in np.linspace(0.0, 1.0, n_t):
        d = ax - t * ay
        q = np.sqrt((d * d).sum(axis=0)) / math.sqrt(1.0 + t * t)
        lower = min(lower, float(q.min()))
    return SampledBounds(lower, upper)
