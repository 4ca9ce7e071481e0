"""Planar geometry for phase-retrieval stability analysis.

Frame vectors in the real plane are identified, up to sign, with points
of a half-plane written in polar form ``t*(cos phi, sin phi)`` with
``t >= 0`` and ``phi in (0, pi]``.  The squaring map

    f(t, phi) = t**2 * (cos 2*phi, sin 2*phi)

carries that half-plane bijectively onto the full plane, and the images
are edge vectors of convex polygons whenever the frame is tight.  This
module implements the map and its inverse, construction of a strictly
convex polygon from an unordered edge multiset, and the support-function
quantities (perimeter, diameter, width, maximal absolute projection sum)
that the stability bounds are built from.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

import numpy as np

Vec2 = tuple[float, float]

TWO_PI = 2.0 * math.pi

# Relative tolerance on ||sum of edges|| / sum of ||edge||.
ZERO_SUM_RTOL = 1e-9
# Two edges closer than this in angle (radians, mod 2*pi) count as repeated.
DIRECTION_ATOL = 1e-12
# Unit-vector arguments may deviate from norm 1 by at most this much.
UNIT_NORM_ATOL = 1e-12


class ZeroSumViolation(ValueError):
    """Edge multiset does not sum to zero within tolerance."""


class DegenerateEdge(ValueError):
    """Edge multiset contains a zero vector."""


class RepeatedDirection(ValueError):
    """Two edges point in the same direction (equal angles mod 2*pi)."""


class NonUnitDirection(ValueError):
    """Direction argument is not a unit vector."""


class EmptyEdgeSet(ValueError):
    """Operation requires at least one edge."""


# ---- Half-plane model ----


@dataclasses.dataclass(frozen=True)
class PolarVector:
    """Point ``t*(cos phi, sin phi)`` of the half-plane, ``phi in (0, pi]``.

    The zero vector is stored canonically as ``(t=0, phi=pi)``; the
    constructor normalizes that case and rejects everything else outside
    the admissible range.

    >>> PolarVector(0.0, 0.3).phi == math.pi
    True
    """

    t: float
    phi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t) and math.isfinite(self.phi)):
            raise ValueError("polar components must be finite")
        if self.t < 0.0:
            raise ValueError(f"radius must be nonnegative, got {self.t}")
        if self.t == 0.0:
            object.__setattr__(self, "phi", math.pi)
        elif not 0.0 < self.phi <= math.pi:
            raise ValueError(f"angle must lie in (0, pi], got {self.phi}")

    def xy(self) -> Vec2:
        return (self.t * math.cos(self.phi), self.t * math.sin(self.phi))


def half_to_edge(a: PolarVector) -> Vec2:
    """Apply the squaring map: (t, phi) -> t^2 * (cos 2*phi, sin 2*phi)."""
    r = a.t * a.t
    return (r * math.cos(2.0 * a.phi), r * math.sin(2.0 * a.phi))


def edge_to_half(e: Sequence[float]) -> PolarVector:
    """Invert the squaring map into the half-plane.

    For ``e = t0*(cos psi, sin psi)`` with ``t0 > 0`` and ``psi in
    (0, 2*pi]`` the preimage is ``(sqrt(t0), psi/2)``; the zero vector
    maps to the canonical zero.

    >>> edge_to_half((1.0, 0.0))
    PolarVector(t=1.0, phi=3.141592653589793)
    """
    x, y = float(e[0]), float(e[1])
    t0 = math.hypot(x, y)
    if t0 == 0.0:
        return PolarVector(0.0, math.pi)
    psi = math.atan2(y, x)
    if psi <= 0.0:
        psi += TWO_PI
    return PolarVector(math.sqrt(t0), 0.5 * psi)


def edge_image(v: Sequence[float]) -> Vec2:
    """Edge vector associated with a frame vector.

    Algebraically ``(x, y) -> (x^2 - y^2, 2*x*y)``, which equals the
    squaring map applied to the half-plane representative of ``v`` and is
    invariant under ``v -> -v``.
    """
    x, y = float(v[0]), float(v[1])
    return (x * x - y * y, 2.0 * x * y)


# ---- Edge multiset predicates ----


def direction_angle(v: Sequence[float]) -> float:
    """Angle of a nonzero vector in [0, 2*pi)."""
    a = math.atan2(float(v[1]), float(v[0]))
    return a + TWO_PI if a < 0.0 else a


def edge_sum(edges: Sequence[Sequence[float]]) -> Vec2:
    sx = math.fsum(float(e[0]) for e in edges)
    sy = math.fsum(float(e[1]) for e in edges)
    return (sx, sy)


def is_zero_sum(edges: Sequence[Sequence[float]], rtol: float = ZERO_SUM_RTOL) -> bool:
    """Whether the edges sum to zero, relative to the total edge length."""
    total = math.fsum(math.hypot(float(e[0]), float(e[1])) for e in edges)
    return math.hypot(*edge_sum(edges)) <= rtol * total


def all_nonzero(edges: Sequence[Sequence[float]]) -> bool:
    return all(float(e[0]) != 0.0 or float(e[1]) != 0.0 for e in edges)


def distinct_directions(edges: Sequence[Sequence[float]], atol: float = DIRECTION_ATOL) -> bool:
    """Whether edge angles are pairwise distinct mod 2*pi.

    Antipodal edges count as distinct; only near-equal angles (within
    ``atol`` radians, including across the 0/2*pi seam) are repeats.
    """
    angles = sorted(direction_angle(e) for e in edges)
    if len(angles) < 2:
        return True
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(angles[0] + TWO_PI - angles[-1])
    return min(gaps) > atol


# ---- Convex polygons ----


@dataclasses.dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon with vertices in counterclockwise order."""

    vertices: tuple[Vec2, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        clean = tuple((float(v[0]), float(v[1])) for v in self.vertices)
        if not all(math.isfinite(x) and math.isfinite(y) for x, y in clean):
            raise ValueError("vertices must be finite")
        object.__setattr__(self, "vertices", clean)
        edges = self.edges()
        if not all_nonzero(edges):
            raise DegenerateEdge("repeated vertex")
        if not distinct_directions(edges):
            raise RepeatedDirection("collinear adjacent edges")
        angles = [direction_angle(e) for e in edges]
        k = min(range(len(angles)), key=angles.__getitem__)
        rotated = angles[k:] + angles[:k]
        if any(b <= a for a, b in zip(rotated, rotated[1:])):
            raise ValueError("vertices are not in strictly convex ccw position")

    @property
    def m(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[Vec2, ...]:
        vs = self.vertices
        n = len(vs)
        return tuple(
            (vs[(i + 1) % n][0] - vs[i][0], vs[(i + 1) % n][1] - vs[i][1])
            for i in range(n)
        )

    def perimeter(self) -> float:
        return math.fsum(math.hypot(ex, ey) for ex, ey in self.edges())

    def diameter(self) -> float:
        pts = np.asarray(self.vertices)
        d = pts[:, None, :] - pts[None, :, :]
        return float(np.sqrt((d * d).sum(axis=2)).max())

    def diameter_pairs(self, rtol: float = 1e-9) -> list[tuple[int, int]]:
        """Vertex index pairs whose distance is within rtol of the diameter."""
        pts = np.asarray(self.vertices)
        d = pts[:, None, :] - pts[None, :, :]
        dist = np.sqrt((d * d).sum(axis=2))
        diam = float(dist.max())
        i, j = np.nonzero(dist >= diam * (1.0 - rtol))
        return [(int(a), int(b)) for a, b in zip(i, j) if a < b]

    def support_width(self, u: Sequence[float]) -> float:
        """Width of the polygon along the unit direction ``u``."""
        ux, uy = float(u[0]), float(u[1])
        if abs(math.hypot(ux, uy) - 1.0) > UNIT_NORM_ATOL:
            raise NonUnitDirection(f"expected a unit vector, got {(ux, uy)}")
        proj = [x * ux + y * uy for x, y in self.vertices]
        return max(proj) - min(proj)


def polygon_from_edges(
    edges: Sequence[Sequence[float]],
    zero_sum_rtol: float = ZERO_SUM_RTOL,
    direction_atol: float = DIRECTION_ATOL,
) -> ConvexPolygon:
    """Assemble the unique strictly convex polygon with the given edges.

    The edges are validated (none zero, pairwise distinct directions,
    sum zero within tolerance), sorted counterclockwise by angle, and
    accumulated into a vertex chain anchored at the origin.

    >>> p = polygon_from_edges([(1, 0), (0, 1), (-1, 0), (0, -1)])
    >>> p.vertices
    ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))
    """
    es = [(float(e[0]), float(e[1])) for e in edges]
    if len(es) < 3:
        raise EmptyEdgeSet("need at least 3 edges to close a convex polygon")
    if not all_nonzero(es):
        raise DegenerateEdge("zero edge vector")
    if not is_zero_sum(es, zero_sum_rtol):
        sx, sy = edge_sum(es)
        raise ZeroSumViolation(f"edge sum ({sx:.3e}, {sy:.3e}) is not zero")
    if not distinct_directions(es, direction_atol):
        raise RepeatedDirection("two edges share a direction")
    es.sort(key=direction_angle)
    verts = [(0.0, 0.0)]
    for ex, ey in es[:-1]:
        px, py = verts[-1]
        verts.append((px + ex, py + ey))
    return ConvexPolygon(tuple(verts))


def ratio_r(p: ConvexPolygon) -> float:
    """Diameter-to-perimeter ratio of a convex polygon."""
    return p.diameter() / p.perimeter()


def ratio_r_projection(p: ConvexPolygon) -> float:
    """The same ratio computed from the projection-sum identity.

    For a convex polygon the diameter equals half the maximal absolute
    projection sum of its edges, so this must agree with ``ratio_r``.
    """
    value, _ = max_abs_projection_sum(p.edges())
    return value / (2.0 * p.perimeter())


def max_abs_projection_sum(
    edges: Sequence[Sequence[float]],
) -> tuple[float, Vec2]:
    """Maximize ``sum_j |<e_j, u>|`` over unit vectors ``u``, exactly.

    The objective has period pi in the angle of ``u`` and is smooth except
    where some ``<e_j, u>`` changes sign, i.e. at the breakpoint angles
    ``angle(e_j) + pi/2 (mod pi)``.  Between consecutive breakpoints the
    sign pattern ``s_j`` is constant and the objective equals
    ``<sum_j s_j e_j, u>``, a sinusoid whose interior maximum sits at the
    angle of ``v = sum_j s_j e_j``.  Evaluating the true objective at all
    breakpoints and at each arc's stationary angle therefore yields the
    exact global maximum.

    Returns the maximum and a maximizing unit vector (angle normalized to
    ``[0, pi)``).  Zero-sum is not required; any non-empty multiset works.
    """
    es = [(float(e[0]), float(e[1])) for e in edges]
    if not es:
        raise EmptyEdgeSet("no edges given")
    arr = np.asarray(es)

    def objective(psi: float) -> float:
        u = np.array([math.cos(psi), math.sin(psi)])
        return float(np.abs(arr @ u).sum())

    nonzero = [e for e in es if e[0] != 0.0 or e[1] != 0.0]
    if not nonzero:
        return 0.0, (1.0, 0.0)
    breaks = sorted({(direction_angle(e) + 0.5 * math.pi) % math.pi for e in nonzero})
    arcs = list(zip(breaks, breaks[1:])) + [(breaks[-1], breaks[0] + math.pi)]

    best_val = -1.0
    best_psi = 0.0
    for lo, hi in arcs:
        mid = 0.5 * (lo + hi)
        u_mid = np.array([math.cos(mid), math.sin(mid)])
        signs = np.where(arr @ u_mid >= 0.0, 1.0, -1.0)
        vx, vy = (signs[:, None] * arr).sum(axis=0)
        alpha = math.atan2(vy, vx)
        candidates = [lo, hi]
        for k in (-2, -1, 0, 1, 2):
            c = alpha + k * math.pi
            if lo < c < hi:
                candidates.append(c)
        for psi in candidates:
            val = objective(psi)
            if val > best_val:
                best_val, best_psi = val, psi

    best_psi %= math.pi
    return best_val, (math.cos(best_psi), math.sin(best_psi))


def polygon_json(p: ConvexPolygon) -> dict:
    """JSON-ready summary of a polygon."""
    return {
        "m": p.m,
        "vertices": [[x, y] for x, y in p.vertices],
        "edges": [[x, y] for x, y in p.edges()],
        "diameter": p.diameter(),
        "perimeter": p.perimeter(),
        "r": ratio_r(p),
    }
