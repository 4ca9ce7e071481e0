"""Integer polynomial arithmetic and the exact vanishing-sum test."""

import doctest
import math

import numpy as np
import pytest

import optiframe.cyclotomic
import optiframe.geometry
from optiframe.cyclotomic import (
    cyclotomic_polynomial,
    poly_divmod,
    poly_mul,
    power_residues,
    sign_sum_is_zero,
    sign_sum_numeric,
)


def test_module_doctests():
    for module in (optiframe.cyclotomic, optiframe.geometry):
        failures, _ = doctest.testmod(module)
        assert failures == 0, module.__name__


def test_known_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # First index with a coefficient outside {-1, 0, 1}.
    assert min(cyclotomic_polynomial(105)) == -2


def test_product_over_divisors():
    for n in range(1, 61):
        prod = (1,)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic_polynomial(d))
        target = (-1,) + (0,) * (n - 1) + (1,)
        assert prod == target, n


def test_poly_mul_matches_convolution():
    rng = np.random.default_rng(21)
    for _ in range(50):
        a = tuple(int(v) for v in rng.integers(-9, 10, size=int(rng.integers(1, 8))))
        b = tuple(int(v) for v in rng.integers(-9, 10, size=int(rng.integers(1, 8))))
        got = poly_mul(a, b)
        want = tuple(int(v) for v in np.convolve(a, b))
        # Trailing zeros are trimmed by poly_mul.
        assert got == want[: len(got)]
        assert all(v == 0 for v in want[len(got) :])


def test_divmod_reconstructs():
    rng = np.random.default_rng(22)
    for _ in range(50):
        q = tuple(int(v) for v in rng.integers(-5, 6, size=int(rng.integers(1, 6))))
        d = tuple(int(v) for v in rng.integers(-5, 6, size=int(rng.integers(0, 4)))) + (1,)
        r = tuple(int(v) for v in rng.integers(-5, 6, size=len(d) - 1))
        prod = poly_mul(q, d)
        a = tuple(
            x + (r[i] if i < len(r) else 0) for i, x in enumerate(prod)
        )
        got_q, got_r = poly_divmod(a, d)
        assert len(got_r) < len(d)
        recon = list(poly_mul(got_q, d)) + [0] * len(a)
        for i, c in enumerate(got_r):
            recon[i] += c
        assert tuple(recon[: len(a)]) == a


def test_power_residues_mod_phi12():
    mat = power_residues(12, 6)
    deg = len(cyclotomic_polynomial(12)) - 1
    assert deg == 4 and len(mat) == 7
    # x^j mod x^4 - x^2 + 1 for j = 0..3 is x^j itself.
    for j in range(deg):
        row = mat[j]
        assert row[j] == 1 and sum(abs(c) for c in row) == 1
    assert mat[4] == (-1, 0, 1, 0)
    assert mat[5] == (0, -1, 0, 1)


def test_sign_sum_examples():
    assert sign_sum_is_zero((1, -1, 1))
    assert sign_sum_is_zero((-1, 1, -1))
    assert not sign_sum_is_zero((1, 1, 1))
    assert not sign_sum_is_zero((1, 1, -1))


def test_sign_sum_validation():
    with pytest.raises(ValueError):
        sign_sum_is_zero(())
    with pytest.raises(ValueError):
        sign_sum_is_zero((1, 0, 1))
    with pytest.raises(ValueError):
        sign_sum_is_zero((1, 2, 1))


def test_exact_matches_numeric():
    # The float route evaluates sum eps_j exp(i pi j / m) directly; both
    # routes must classify every vector identically for small m.
    for m in range(1, 13):
        for idx in range(1 << m):
            signs = tuple(1 - 2 * ((idx >> j) & 1) for j in range(m))
            exact = sign_sum_is_zero(signs)
            value = sign_sum_numeric(signs)
            assert exact == (value <= 1e-9 * m), (m, signs)
            if exact:
                assert value <= 1e-12 * m


def test_numeric_sum_value():
    # eps = (1, -1, 1): zeta - zeta^2 + zeta^3 with zeta = exp(i pi/3).
    z = complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    s = z - z * z + z ** 3
    assert sign_sum_numeric((1, -1, 1)) == pytest.approx(abs(s), abs=1e-15)
