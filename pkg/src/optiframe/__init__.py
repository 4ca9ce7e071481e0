"""Optimal condition numbers for phase retrieval by plane frames.

The package answers three related questions about finite frames of the
real plane: how stable the phaseless measurement map of a frame is
(condition number beta = U/L of the optimal bi-Lipschitz bounds), which
frames minimize beta for a given number of vectors, and how both
questions translate into the geometry of convex polygons via a squaring
map that turns tight frames into closed edge multisets.
"""

from .constructions import (
    NoOddFactor,
    NotASolution,
    NotIrreducible,
    NotStrictlyConvex,
    OptimalPair,
    frame_to_polygon,
    harmonic_frame,
    mu,
    nu,
    nu_perp,
    optimal_frame_from_sign,
    optimal_frame_m4,
    optimal_pair_from_sign,
    optimal_pair_m4,
    optimal_polygon_from_sign,
    polygon_to_frame,
)
from .cyclotomic import cyclotomic_polynomial, sign_sum_is_zero, sign_sum_numeric
from .enumeration import (
    MTooLarge,
    SignClass,
    canonical_form,
    class_count,
    enumerate_solution_classes,
    flip,
    has_odd_factor,
    is_power_of_two,
    iter_solutions,
    orbit,
    shift,
)
from .frames import (
    ConditionReport,
    Frame,
    NotTight,
    beta_harmonic,
    beta_min_bound,
    condition_number,
    condition_number_tight,
    is_irreducible,
    is_tight,
    lipschitz_lower_cap,
    lower_lipschitz_numeric,
    phaseless_map,
    universal_lower_bounds,
    upper_lipschitz,
)
from .geometry import (
    ConvexPolygon,
    DegenerateEdge,
    EmptyEdgeSet,
    NonUnitDirection,
    PolarVector,
    RepeatedDirection,
    ZeroSumViolation,
    edge_image,
    edge_to_half,
    half_to_edge,
    max_abs_projection_sum,
    polygon_from_edges,
    ratio_r,
    ratio_r_projection,
)
from .oracle import (
    NonUnitEdges,
    brute_force_diameter,
    brute_force_solutions,
    discrepancy_max,
    sampled_lipschitz,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionReport",
    "ConvexPolygon",
    "DegenerateEdge",
    "EmptyEdgeSet",
    "Frame",
    "MTooLarge",
    "NoOddFactor",
    "NonUnitDirection",
    "NonUnitEdges",
    "NotASolution",
    "NotIrreducible",
    "NotStrictlyConvex",
    "NotTight",
    "OptimalPair",
    "PolarVector",
    "RepeatedDirection",
    "SignClass",
    "ZeroSumViolation",
    "beta_harmonic",
    "beta_min_bound",
    "brute_force_diameter",
    "brute_force_solutions",
    "canonical_form",
    "class_count",
    "condition_number",
    "condition_number_tight",
    "cyclotomic_polynomial",
    "discrepancy_max",
    "edge_image",
    "edge_to_half",
    "enumerate_solution_classes",
    "flip",
    "frame_to_polygon",
    "half_to_edge",
    "harmonic_frame",
    "has_odd_factor",
    "is_irreducible",
    "is_power_of_two",
    "is_tight",
    "iter_solutions",
    "lipschitz_lower_cap",
    "lower_lipschitz_numeric",
    "max_abs_projection_sum",
    "mu",
    "nu",
    "nu_perp",
    "optimal_frame_from_sign",
    "optimal_frame_m4",
    "optimal_pair_from_sign",
    "optimal_pair_m4",
    "optimal_polygon_from_sign",
    "orbit",
    "phaseless_map",
    "polygon_from_edges",
    "polygon_to_frame",
    "ratio_r",
    "ratio_r_projection",
    "sampled_lipschitz",
    "shift",
    "sign_sum_is_zero",
    "sign_sum_numeric",
    "universal_lower_bounds",
    "upper_lipschitz",
]
