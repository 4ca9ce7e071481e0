"""End-to-end acceptance suite.

Each test enforces one headline guarantee at its stated tolerance and
prints a single verdict line (run pytest with -s to see them).  The last
test audits every finite condition number recorded by the earlier ones
against the universal floor, so this module is meant to run in file
order, which is pytest's default.
"""

import math
import time

import numpy as np

from optiframe.constructions import (
    harmonic_frame,
    optimal_pair_from_sign,
    optimal_pair_m4,
)
from optiframe.enumeration import (
    class_count,
    enumerate_solution_classes,
    has_odd_factor,
    iter_solutions,
)
from optiframe.frames import (
    beta_harmonic,
    beta_min_bound,
    condition_number,
    condition_number_tight,
    is_tight,
    lipschitz_lower_cap,
    lower_lipschitz_numeric,
    upper_lipschitz,
)
from optiframe.geometry import edge_image, is_zero_sum, max_abs_projection_sum
from optiframe.oracle import (
    brute_force_solutions,
    discrepancy_max,
    sampled_lipschitz,
)
from optiframe.sampling import (
    random_convex_polygon,
    random_frame,
    random_tight_frame,
    random_unit_edges,
)

EXPECTED_CLASS_COUNTS = {
    3: 1, 4: 0, 5: 1, 6: 1, 7: 1, 8: 0, 9: 2, 10: 1,
    11: 1, 12: 2, 13: 1, 14: 1, 15: 5,
}

# Every finite beta computed while this module runs, audited at the end
# against the universal floor.
RECORDED_BETAS: list[float] = []


def record(beta: float) -> None:
    if math.isfinite(beta):
        RECORDED_BETAS.append(beta)


def test_criterion_01_solution_class_table():
    start = time.perf_counter()
    got = {m: class_count(m) for m in range(3, 16)}
    elapsed = time.perf_counter() - start
    assert got == EXPECTED_CLASS_COUNTS
    assert elapsed < 10.0
    print(f"PASS criterion 01: class counts m=3..15 match in {elapsed:.2f}s")


def test_criterion_02_every_class_attains_the_bound():
    worst = 0.0
    checked = 0
    for m in range(3, 16):
        if not has_odd_factor(m):
            continue
        bound = beta_min_bound(m)
        for cls in enumerate_solution_classes(m):
            pair = optimal_pair_from_sign(cls.canonical)
            record(pair.beta)
            worst = max(worst, abs(pair.beta - bound))
            checked += 1
    assert checked == 17
    assert worst <= 1e-10
    print(
        f"PASS criterion 02: all {checked} classes attain 1/sqrt(1-1/(m sin(pi/2m)))"
        f" (worst gap {worst:.2e})"
    )


def test_criterion_03_quadrilateral_minimizers():
    square = condition_number_tight(harmonic_frame(4))
    record(square.beta)
    assert abs(square.beta - math.sqrt(2.0 + math.sqrt(2.0))) <= 1e-12
    pair = optimal_pair_m4()
    record(pair.beta)
    beta_want = math.sqrt(1.0 + math.sqrt(2.0) / 2.0 + math.sqrt(6.0) / 2.0)
    r_want = 1.0 / (2.0 + math.sqrt(6.0) - math.sqrt(2.0))
    assert abs(pair.beta - beta_want) <= 1e-12
    assert abs(pair.r - r_want) <= 1e-12
    assert pair.beta < square.beta
    print(
        "PASS criterion 03: square and optimal quadrilateral betas match closed"
        f" forms ({square.beta:.6f}, {pair.beta:.6f})"
    )


def test_criterion_04_harmonic_frames():
    worst = 0.0
    for m in range(3, 13):
        report = condition_number(harmonic_frame(m))
        record(report.beta)
        worst = max(worst, abs(report.beta - beta_harmonic(m)))
    assert worst <= 1e-9
    for m in (6, 10, 12):
        assert beta_harmonic(m) > beta_min_bound(m) + 1e-6
    print(
        f"PASS criterion 04: harmonic betas match closed form for m=3..12"
        f" (worst gap {worst:.2e}); even m with an odd factor stay above the bound"
    )


def test_criterion_05_diameter_identity():
    rng = np.random.default_rng(2025)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(500):
        p = random_convex_polygon(rng, int(rng.integers(3, 41)))
        value, _ = max_abs_projection_sum(p.edges())
        worst = max(worst, abs(p.diameter() - 0.5 * value) / p.perimeter())
    elapsed = time.perf_counter() - start
    assert worst <= 1e-9
    assert elapsed < 5.0
    print(
        f"PASS criterion 05: diameter equals half the maximal projection sum on"
        f" 500 polygons (worst {worst:.2e}, {elapsed:.2f}s)"
    )


def test_criterion_06_tightness_iff_zero_edge_sum():
    rng = np.random.default_rng(2026)
    agree = 0
    for _ in range(200):
        f = random_frame(rng, int(rng.integers(3, 12)))
        edges = [edge_image(v) for v in f.vectors]
        assert bool(is_tight(f)) == is_zero_sum(edges)
        agree += 1
    for _ in range(200):
        f = random_tight_frame(rng, int(rng.integers(3, 12)))
        edges = [edge_image(v) for v in f.vectors]
        assert bool(is_tight(f)) and is_zero_sum(edges)
        agree += 1
    print(f"PASS criterion 06: tight iff zero edge-sum on {agree} frames")


def test_criterion_07_exact_and_float_enumeration_agree():
    for m in range(3, 13):
        assert list(iter_solutions(m)) == brute_force_solutions(m)
    print("PASS criterion 07: exact and floating solution sets identical for m=3..12")


def test_criterion_08_numeric_matches_exact_lower_bounds():
    rng = np.random.default_rng(2027)
    start = time.perf_counter()
    worst_rel = 0.0
    for _ in range(100):
        f = random_tight_frame(rng, int(rng.integers(3, 11)))
        exact = condition_number_tight(f)
        record(exact.beta)
        numeric = lower_lipschitz_numeric(f, grid=(2048, 256))
        sampled = sampled_lipschitz(f, n_theta=2000, n_t=129)
        worst_rel = max(worst_rel, abs(numeric.value - exact.lower) / exact.lower)
        # Both estimates sit on the high side of the true constant: they
        # evaluate the true quotient at finitely many points.
        assert exact.lower - 1e-12 <= numeric.value <= sampled.lower + 1e-9
        assert sampled.upper <= exact.upper + 1e-12
        if numeric.value > 0.0:
            record(upper_lipschitz(f) / numeric.value)
    elapsed = time.perf_counter() - start
    assert worst_rel <= 1e-4
    assert elapsed < 60.0
    print(
        f"PASS criterion 08: numeric lower bound within 1e-4 of exact on 100 tight"
        f" frames (worst {worst_rel:.2e}, {elapsed:.2f}s)"
    )


def test_criterion_09_lower_bound_cap():
    rng = np.random.default_rng(2028)
    for _ in range(200):
        f = random_frame(rng, int(rng.integers(3, 13)))
        found = lower_lipschitz_numeric(f, grid=(1024, 128))
        assert found.value ** 2 <= lipschitz_lower_cap(f) + 1e-9
        if found.value > 0.0:
            record(upper_lipschitz(f) / found.value)
    print("PASS criterion 09: numeric L^2 never exceeds the frame-independent cap (200 frames)")


def test_criterion_10_discrepancy_identity():
    rng = np.random.default_rng(2029)
    worst = 0.0
    for _ in range(100):
        edges = random_unit_edges(rng, int(rng.integers(3, 13)))
        value, _ = max_abs_projection_sum(edges)
        worst = max(worst, abs(discrepancy_max(edges) - value))
    assert worst <= 1e-10
    print(
        f"PASS criterion 10: exhaustive sign discrepancy equals the projection"
        f" maximum on 100 edge sets (worst {worst:.2e})"
    )


def test_criterion_11_universal_floor():
    # Baseline betas so this test is meaningful standalone too.
    for m in range(3, 16):
        record(beta_harmonic(m))
    record(optimal_pair_m4().beta)
    floor = 1.6586576
    assert len(RECORDED_BETAS) >= 14
    low = min(RECORDED_BETAS)
    assert low >= floor - 1e-9
    assert low >= math.sqrt(math.pi / (math.pi - 2.0)) - 1e-9
    print(
        f"PASS criterion 11: all {len(RECORDED_BETAS)} finite betas respect the"
        f" universal floor (min {low:.9f})"
    )
