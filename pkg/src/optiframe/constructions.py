"""Optimal frames and polygons built from vanishing sign patterns.

For every solution ``eps`` of the vanishing-sum problem of length m the
unit edges ``eps_j * mu_j`` with ``mu_j = (cos j*pi/m, sin j*pi/m)``
close an equilateral strictly convex m-gon, and the half-plane preimages

    nu_j = (cos j*pi/2m, sin j*pi/2m)    when eps_j = +1,
    rotate(nu_j, pi/2)                   when eps_j = -1,

form a tight frame attaining the minimal condition number among all
m-vector frames.  This requires m to have an odd factor; for m = 4 the
minimizer is a special quadrilateral hard-coded below, and for larger
powers of two no construction is provided here.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

from .cyclotomic import sign_sum_is_zero
from .enumeration import SignVector, has_odd_factor
from .frames import Frame, condition_number_tight, is_irreducible, is_tight
from .geometry import (
    ConvexPolygon,
    Vec2,
    edge_image,
    edge_to_half,
    polygon_from_edges,
    ratio_r,
)


class NotASolution(ValueError):
    """Sign vector does not solve the vanishing-sum problem."""


class NoOddFactor(ValueError):
    """Optimal constructions need m with an odd factor."""


class NotIrreducible(ValueError):
    """Frame has a zero vector or two vectors on a common line."""


class NotStrictlyConvex(ValueError):
    """Vertex list does not bound a strictly convex polygon."""


def mu(j: int, m: int) -> Vec2:
    """Unit edge direction (cos j*pi/m, sin j*pi/m)."""
    return (math.cos(j * math.pi / m), math.sin(j * math.pi / m))


def nu(j: int, m: int) -> Vec2:
    """Half-angle unit vector (cos j*pi/2m, sin j*pi/2m)."""
    a = j * math.pi / (2 * m)
    return (math.cos(a), math.sin(a))


def nu_perp(j: int, m: int) -> Vec2:
    """nu(j, m) rotated by +pi/2."""
    a = j * math.pi / (2 * m)
    return (-math.sin(a), math.cos(a))


def harmonic_frame(m: int) -> Frame:
    """The m equally spaced unit vectors (cos k*pi/m, sin k*pi/m)."""
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    return Frame(tuple((math.cos(k * math.pi / m), math.sin(k * math.pi / m)) for k in range(m)))


def _checked_sign(eps: Sequence[int]) -> SignVector:
    e = tuple(int(s) for s in eps)
    m = len(e)
    if m < 3:
        raise ValueError(f"sign vector must have length at least 3, got {m}")
    if not has_odd_factor(m):
        raise NoOddFactor(f"m={m} is a power of two; no sign pattern closes a polygon")
    if not sign_sum_is_zero(e):
        raise NotASolution(f"{e} does not solve the vanishing-sum problem")
    return e


def optimal_polygon_from_sign(eps: Sequence[int]) -> ConvexPolygon:
    """Equilateral m-gon with edges eps_j * mu_j."""
    e = _checked_sign(eps)
    m = len(e)
    edges = [(s * mx, s * my) for s, (mx, my) in ((s, mu(j, m)) for j, s in enumerate(e, 1))]
    return polygon_from_edges(edges)


def optimal_frame_from_sign(eps: Sequence[int]) -> Frame:
    """Tight frame whose edge polygon is optimal_polygon_from_sign(eps)."""
    e = _checked_sign(eps)
    m = len(e)
    return Frame(tuple(nu(j, m) if s == 1 else nu_perp(j, m) for j, s in enumerate(e, 1)))


def frame_to_polygon(frame: Frame, tight_tol: float = 1e-9) -> ConvexPolygon:
    """Edge polygon of a tight irreducible frame."""
    if not is_tight(frame, tight_tol):
        raise ValueError("frame is not tight within tolerance")
    if not is_irreducible(frame):
        raise NotIrreducible("frame has a zero vector or parallel vectors")
    return polygon_from_edges(
        [edge_image(v) for v in frame.vectors],
        zero_sum_rtol=max(1e-9, 3.0 * tight_tol),
    )


def polygon_to_frame(polygon: ConvexPolygon | Sequence[Vec2]) -> Frame:
    """Tight frame whose squared vectors are the polygon's edges."""
    if not isinstance(polygon, ConvexPolygon):
        try:
            polygon = ConvexPolygon(tuple(polygon))
        except ValueError as exc:
            raise NotStrictlyConvex(str(exc)) from exc
    return Frame(tuple(edge_to_half(e).xy() for e in polygon.edges()))


def optimal_frame_m4() -> Frame:
    """The condition-number minimizer over 4-vector frames.

    No sign pattern exists for m = 4; the minimizer is this specific
    quadrilateral construction with two unit vectors and two shorter
    ones, beta = sqrt(1 + sqrt(2)/2 + sqrt(6)/2).
    """
    s = math.sqrt(2.0 * math.sin(math.pi / 12.0))
    return Frame(
        (
            (-1.0, 0.0),
            (math.cos(2.0 * math.pi / 3.0), math.sin(2.0 * math.pi / 3.0)),
            (s * math.cos(3.0 * math.pi / 8.0), s * math.sin(3.0 * math.pi / 8.0)),
            (s * math.cos(7.0 * math.pi / 24.0), s * math.sin(7.0 * math.pi / 24.0)),
        )
    )


@dataclasses.dataclass(frozen=True)
class OptimalPair:
    """A minimizing frame together with its edge polygon and invariants."""

    m: int
    sign: SignVector | None
    polygon: ConvexPolygon
    frame: Frame
    beta: float
    r: float

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "sign": list(self.sign) if self.sign is not None else None,
            "beta": self.beta,
            "r": self.r,
            "vertices": [[x, y] for x, y in self.polygon.vertices],
            "frame": [[x, y] for x, y in self.frame.vectors],
        }


def optimal_pair_from_sign(eps: Sequence[int]) -> OptimalPair:
    """Bundle polygon, frame, and exact condition number for a solution."""
    e = _checked_sign(eps)
    polygon = optimal_polygon_from_sign(e)
    frame = optimal_frame_from_sign(e)
    report = condition_number_tight(frame)
    return OptimalPair(len(e), e, polygon, frame, report.beta, ratio_r(polygon))


def pair_from_tight_frame(frame: Frame) -> OptimalPair:
    """Bundle any tight irreducible frame with its polygon and exact beta.

    The sign field is None; it only applies to sign-pattern minimizers.
    """
    polygon = frame_to_polygon(frame)
    report = condition_number_tight(frame)
    return OptimalPair(frame.m, None, polygon, frame, report.beta, ratio_r(polygon))


def optimal_pair_m4() -> OptimalPair:
    """The m = 4 minimizer as an OptimalPair (sign is None)."""
    return pair_from_tight_frame(optimal_frame_m4())
