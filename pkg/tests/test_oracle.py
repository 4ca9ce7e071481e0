"""Brute-force oracles against the structured computation paths."""

import math

import numpy as np
import pytest

from optiframe.constructions import harmonic_frame
from optiframe.enumeration import MTooLarge, iter_solutions
from optiframe.frames import condition_number_tight, upper_lipschitz
from optiframe.geometry import max_abs_projection_sum
from optiframe.oracle import (
    NonUnitEdges,
    SampledBounds,
    brute_force_diameter,
    brute_force_solutions,
    discrepancy_max,
    sampled_lipschitz,
)
from optiframe.sampling import random_convex_polygon, random_tight_frame, random_unit_edges


def test_brute_solutions_m3():
    assert brute_force_solutions(3) == [(1, -1, 1), (-1, 1, -1)]


def test_brute_solutions_match_exact_scan():
    for m in range(3, 13):
        assert brute_force_solutions(m) == list(iter_solutions(m))


def test_brute_solution_caps():
    with pytest.raises(ValueError):
        brute_force_solutions(2)
    with pytest.raises(MTooLarge):
        brute_force_solutions(21)


def test_brute_diameter_matches_fast_path():
    rng = np.random.default_rng(61)
    for _ in range(50):
        p = random_convex_polygon(rng, int(rng.integers(3, 25)))
        assert brute_force_diameter(p) == pytest.approx(p.diameter(), abs=1e-12)


def test_discrepancy_identity():
    # For unit edges, the sign choice maximizing ||sum eps_j e_j|| lines
    # every edge up with one direction, so the maximum equals the maximal
    # absolute projection sum.
    rng = np.random.default_rng(62)
    for _ in range(20):
        edges = random_unit_edges(rng, int(rng.integers(3, 13)))
        value, _ = max_abs_projection_sum(edges)
        assert discrepancy_max(edges) == pytest.approx(value, abs=1e-10)


def test_discrepancy_rejects_bad_input():
    with pytest.raises(NonUnitEdges):
        discrepancy_max([(1.0, 0.0), (0.5, 0.0)])
    with pytest.raises(MTooLarge):
        discrepancy_max([(1.0, 0.0)] * 25)


def test_sampled_bounds_bracket_exact_values():
    for m in range(3, 9):
        f = harmonic_frame(m)
        report = condition_number_tight(f)
        got = sampled_lipschitz(f, n_theta=8000, n_t=201)
        assert report.lower - 1e-12 <= got.lower <= report.lower + 5e-3
        assert report.upper - 1e-6 <= got.upper <= report.upper + 1e-12


def test_sampled_bounds_tighten_with_refinement():
    rng = np.random.default_rng(63)
    f = random_tight_frame(rng, 7)
    exact = condition_number_tight(f)
    coarse = sampled_lipschitz(f, n_theta=500, n_t=65)
    mid = sampled_lipschitz(f, n_theta=1000, n_t=129)
    fine = sampled_lipschitz(f, n_theta=2000, n_t=257)
    # Each grid contains the previous one, so the estimates are monotone
    # and stay on the correct side of the true constants.
    assert coarse.lower >= mid.lower >= fine.lower >= exact.lower - 1e-12
    assert coarse.upper <= mid.upper <= fine.upper <= exact.upper + 1e-12
    assert coarse.upper <= upper_lipschitz(f) + 1e-12


def test_sampled_grid_validation():
    with pytest.raises(ValueError):
        sampled_lipschitz(harmonic_frame(3), n_theta=1)
    assert isinstance(sampled_lipschitz(harmonic_frame(3)), SampledBounds)
