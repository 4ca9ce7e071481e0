"""Lipschitz bounds and condition numbers for phase retrieval in the plane.

A frame is a finite list of row vectors ``a_1..a_m`` in R^2.  The
phaseless measurement map sends ``x`` to ``(|<a_1,x>|, ..., |<a_m,x>|)``;
its stability is measured by the optimal bounds

    L * dist(x, y) <= || |Ax| - |Ay| ||_2 <= U * dist(x, y)

with ``dist(x, y) = min(||x-y||, ||x+y||)``.  The upper constant is the
spectral norm of ``A``.  For tight frames the lower constant, and hence
the condition number ``beta = U/L``, is computed exactly through the
geometry of an associated convex polygon; otherwise a two-variable
numeric minimization over

    q(theta, t) = || |A x_theta| - t |A x_theta_perp| || / sqrt(1 + t^2)

with ``theta in [0, pi)``, ``t in [0, 1]`` recovers it to high accuracy.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

import numpy as np

from .geometry import (
    DIRECTION_ATOL,
    Vec2,
    direction_angle,
    edge_image,
    max_abs_projection_sum,
    polygon_from_edges,
    ratio_r,
)

TIGHT_TOL = 1e-9
DEFAULT_GRID = (4096, 512)
DEFAULT_REFINE_TOL = 1e-10


class NotTight(ValueError):
    """The exact condition-number path requires a tight frame."""


@dataclasses.dataclass(frozen=True)
class Frame:
    """Finite frame of row vectors in the real plane (m >= 2)."""

    vectors: tuple[Vec2, ...]

    def __post_init__(self) -> None:
        clean = tuple((float(v[0]), float(v[1])) for v in self.vectors)
        if len(clean) < 2:
            raise ValueError("a frame needs at least 2 vectors")
        if not all(math.isfinite(x) and math.isfinite(y) for x, y in clean):
            raise ValueError("frame vectors must be finite")
        object.__setattr__(self, "vectors", clean)

    @property
    def m(self) -> int:
        return len(self.vectors)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vectors, dtype=float)

    def gram_entries(self) -> tuple[float, float, float]:
        """(a, b, c) with a = sum x^2, b = sum y^2, c = sum x*y."""
        a = math.fsum(x * x for x, _ in self.vectors)
        b = math.fsum(y * y for _, y in self.vectors)
        c = math.fsum(x * y for x, y in self.vectors)
        return a, b, c


@dataclasses.dataclass(frozen=True)
class TightnessCheck:
    """Outcome of the tightness test with its Gram certificate."""

    ok: bool
    a: float
    b: float
    c: float

    def __bool__(self) -> bool:
        return self.ok


def is_tight(frame: Frame, tol: float = TIGHT_TOL) -> TightnessCheck:
    """Test A^T A = C*I within a relative tolerance on a + b."""
    a, b, c = frame.gram_entries()
    scale = a + b
    ok = abs(a - b) <= tol * scale and abs(c) <= tol * scale
    return TightnessCheck(ok, a, b, c)


def phaseless_map(frame: Frame, x: Sequence[float]) -> tuple[float, ...]:
    """The measurement vector (|<a_j, x>|)_j."""
    xv = np.asarray([float(x[0]), float(x[1])])
    return tuple(float(v) for v in np.abs(frame.as_array() @ xv))


def _gram_eigenvalues(frame: Frame) -> tuple[float, float]:
    a, b, c = frame.gram_entries()
    half_span = math.hypot(0.5 * (a - b), c)
    mid = 0.5 * (a + b)
    return max(mid - half_span, 0.0), mid + half_span


def upper_lipschitz(frame: Frame) -> float:
    """Spectral norm of the frame matrix (closed form for 2 columns)."""
    return math.sqrt(_gram_eigenvalues(frame)[1])


def is_irreducible(frame: Frame, atol: float = DIRECTION_ATOL) -> bool:
    """No zero vectors and no two vectors on a common line."""
    if any(x == 0.0 and y == 0.0 for x, y in frame.vectors):
        return False
    images = [edge_image(v) for v in frame.vectors]
    angles = sorted(direction_angle(e) for e in images)
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(angles[0] + 2.0 * math.pi - angles[-1])
    return min(gaps) > atol


# ---- Reports ----


@dataclasses.dataclass(frozen=True)
class ConditionReport:
    """Stability summary of a frame: bounds, ratio, computation path."""

    m: int
    upper: float
    lower: float
    beta: float
    method: str
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "U": self.upper,
            "L": self.lower,
            "beta": "inf" if math.isinf(self.beta) else self.beta,
            "method": self.method,
            "witness": self.witness,
        }


def _merge_parallel_edges(
    edges: Sequence[Vec2], atol: float = DIRECTION_ATOL
) -> tuple[list[Vec2], bool]:
    """Drop zero edges and sum runs of equal-direction edges.

    Returns the reduced list and whether any reduction happened.
    """
    nonzero = [e for e in edges if e[0] != 0.0 or e[1] != 0.0]
    reduced_any = len(nonzero) < len(edges)
    if not nonzero:
        return [], reduced_any
    nonzero.sort(key=direction_angle)
    merged: list[Vec2] = [nonzero[0]]
    last_angle = direction_angle(nonzero[0])
    for e in nonzero[1:]:
        ang = direction_angle(e)
        if ang - last_angle <= atol:
            px, py = merged[-1]
            merged[-1] = (px + e[0], py + e[1])
            reduced_any = True
        else:
            merged.append(e)
            last_angle = ang
    # seam: first and last cluster may share a direction mod 2*pi
    if len(merged) > 1:
        first_angle = direction_angle(merged[0])
        if first_angle + 2.0 * math.pi - direction_angle(merged[-1]) <= atol:
            ex, ey = merged.pop()
            merged[0] = (merged[0][0] + ex, merged[0][1] + ey)
            reduced_any = True
    return merged, reduced_any


def condition_number_tight(frame: Frame, tol: float = TIGHT_TOL) -> ConditionReport:
    """Exact condition number of a tight frame via its edge polygon.

    The squared-vector images of an irreducible tight frame are the edge
    multiset of a strictly convex polygon P, and beta = 1/sqrt(1 - 2 r(P))
    with r the diameter-to-perimeter ratio.  Reducible frames are handled
    by dropping zero images and merging equal-direction images first; if
    fewer than 3 directions survive, the projection-sum form of the same
    formula applies directly and yields beta = +inf.
    """
    check = is_tight(frame, tol)
    if not check:
        raise NotTight("frame is not tight within tolerance")
    capacity = 0.5 * (check.a + check.b)
    upper = math.sqrt(capacity)
    if capacity == 0.0:
        return ConditionReport(frame.m, 0.0, 0.0, math.inf, "exact_tight", None)

    edges = [edge_image(v) for v in frame.vectors]
    merged, reduced = _merge_parallel_edges(edges)
    method = "exact_reduced" if reduced else "exact_tight"
    total_len = math.fsum(math.hypot(ex, ey) for ex, ey in merged)

    if len(merged) >= 3:
        polygon = polygon_from_edges(merged, zero_sum_rtol=max(1e-9, 3.0 * tol))
        r = ratio_r(polygon)
        value, direction = max_abs_projection_sum(merged)
        witness = {"direction": [direction[0], direction[1]], "r": r}
    else:
        value, direction = max_abs_projection_sum(merged)
        r = value / (2.0 * total_len)
        witness = {"direction": [direction[0], direction[1]], "r": r}

    slack = 1.0 - 2.0 * r
    if slack <= 1e-15:
        return ConditionReport(frame.m, upper, 0.0, math.inf, method, witness)
    beta = 1.0 / math.sqrt(slack)
    return ConditionReport(frame.m, upper, upper / beta, beta, method, witness)


@dataclasses.dataclass(frozen=True)
class NumericLipschitz:
    """Refined grid minimum of the lower-Lipschitz quotient."""

    value: float
    theta: float
    t: float


def lower_lipschitz_numeric(
    frame: Frame,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> NumericLipschitz:
    """Minimize the Lipschitz quotient q(theta, t) numerically.

    A coarse grid over theta in [0, pi) and t in [0, 1] locates the
    basin; per-variable interval halving then refines the minimizer until
    both bracket widths drop below ``refine_tol``.  Rank-deficient frames
    short-circuit to 0.
    """
    lo_eig, hi_eig = _gram_eigenvalues(frame)
    if lo_eig <= 1e-14 * max(hi_eig, 1e-300):
        return NumericLipschitz(0.0, 0.0, 0.0)

    arr = frame.as_array()
    n_theta, n_t = grid
    thetas = np.arange(n_theta) * (math.pi / n_theta)
    dirs = np.stack([np.cos(thetas), np.sin(thetas)])
    perps = np.stack([-dirs[1], dirs[0]])
    p = np.abs(arr @ dirs)
    q = np.abs(arr @ perps)
    p2 = (p * p).sum(axis=0)
    q2 = (q * q).sum(axis=0)
    pq = (p * q).sum(axis=0)
    ts = np.linspace(0.0, 1.0, n_t)
    num = p2[:, None] - 2.0 * ts[None, :] * pq[:, None] + (ts * ts)[None, :] * q2[:, None]
    qq = np.maximum(num / (1.0 + ts * ts)[None, :], 0.0)
    flat = int(np.argmin(qq))
    i, j = divmod(flat, n_t)
    best = float(qq[i, j])
    theta, t = float(thetas[i]), float(ts[j])

    def squared_quotient(th: float, tv: float) -> float:
        x = np.array([math.cos(th), math.sin(th)])
        ax = np.abs(arr @ x)
        ay = np.abs(arr @ np.array([-x[1], x[0]]))
        d = ax - tv * ay
        return float(d @ d) / (1.0 + tv * tv)

    b_theta = math.pi / n_theta
    b_t = 1.0 / (n_t - 1)
    while max(b_theta, b_t) > refine_tol:
        for th in np.linspace(theta - b_theta, theta + b_theta, 17):
            v = squared_quotient(float(th), t)
            if v < best:
                best, theta = v, float(th)
        b_theta *= 0.5
        lo = max(t - b_t, 0.0)
        hi = min(t + b_t, 1.0)
        for tv in np.linspace(lo, hi, 17):
            v = squared_quotient(theta, float(tv))
            if v < best:
                best, t = v, float(tv)
        b_t *= 0.5
    return NumericLipschitz(math.sqrt(best), theta % math.pi, t)


def condition_number(
    frame: Frame,
    tight_tol: float = TIGHT_TOL,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> ConditionReport:
    """Condition number of any frame: exact when tight, numeric otherwise."""
    if is_tight(frame, tight_tol):
        return condition_number_tight(frame, tight_tol)
    upper = upper_lipschitz(frame)
    found = lower_lipschitz_numeric(frame, grid, refine_tol)
    witness = {"theta": found.theta, "t": found.t}
    if found.value <= 0.0:
        return ConditionReport(frame.m, upper, 0.0, math.inf, "numeric", witness)
    return ConditionReport(
        frame.m, upper, found.value, upper / found.value, "numeric", witness
    )


# ---- Closed-form bounds ----


def beta_harmonic(m: int) -> float:
    """Exact condition number of the m-vector harmonic frame (m >= 3)."""
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if m % 2 == 0:
        return 1.0 / math.sqrt(1.0 - 2.0 / (m * math.sin(math.pi / m)))
    return beta_min_bound(m)


def beta_min_bound(m: int) -> float:
    """Lower bound 1/sqrt(1 - 1/(m sin(pi/2m))) on beta over m-vector frames.

    Attained exactly when m has an odd factor; strict for powers of two.
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    return 1.0 / math.sqrt(1.0 - 1.0 / (m * math.sin(math.pi / (2 * m))))


def universal_lower_bounds() -> tuple[float, float]:
    """Frame-independent floors on beta: (real case, complex case)."""
    return (
        math.sqrt(math.pi / (math.pi - 2.0)),
        math.sqrt(4.0 / (4.0 - math.pi)),
    )


def lipschitz_lower_cap(frame: Frame) -> float:
    """Upper bound on L^2 valid for every m-vector frame.

    Equals ``(1/2) * (1 - 1/(m sin(pi/2m))) * sum ||a_j||^2``; no frame
    with the same vector count and norm mass can exceed it.
    """
    a, b, _ = frame.gram_entries()
    m = frame.m
    return 0.5 * (1.0 - 1.0 / (m * math.sin(math.pi / (2 * m)))) * (a + b)
