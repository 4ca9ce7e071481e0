"""Exact integer-polynomial test for vanishing signed sums of roots of unity.

A sign vector ``eps in {+1, -1}^m`` solves the vanishing-sum problem when

    sum_{j=1..m} eps_j * zeta^j = 0,   zeta = exp(i*pi/m),

i.e. when the integer polynomial ``p(x) = sum eps_j x^j`` is divisible by
the minimal polynomial of ``zeta``, the cyclotomic polynomial
``Phi_{2m}``.  Everything here runs over arbitrary-precision integers, so
the test is exact; a floating companion is provided for cross-checks.

Polynomials are coefficient tuples, constant term first, normalized so
the last entry is nonzero (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import cmath
import functools
import math
from typing import Sequence

IntPoly = tuple[int, ...]


def _trim(coeffs: Sequence[int]) -> IntPoly:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Product of two integer polynomials.

    >>> poly_mul((-1, 1), (1, 1))
    (-1, 0, 1)
    """
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def poly_divmod(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division by a monic integer polynomial.

    >>> poly_divmod((-1, 0, 0, 0, 0, 0, 1), (-1, 1))  # (x^6-1)/(x-1)
    ((1, 1, 1, 1, 1, 1), ())
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if den[-1] != 1:
        raise ValueError("divisor must be monic for exact integer division")
    rem = list(num)
    dn = len(den)
    quot = [0] * max(len(rem) - dn + 1, 0)
    for i in range(len(rem) - dn, -1, -1):
        q = rem[i + dn - 1]
        if q:
            quot[i] = q
            for j, dj in enumerate(den):
                rem[i + j] -= q * dj
    return _trim(quot), _trim(rem)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """Coefficients of the n-th cyclotomic polynomial, exactly.

    Computed by the recursive exact division
    ``Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d``.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    >>> cyclotomic_polynomial(8)
    (1, 0, 0, 0, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return (-1, 1)
    xn_minus_1: IntPoly = _trim([-1] + [0] * (n - 1) + [1])
    prod: IntPoly = (1,)
    for d in divisors(n)[:-1]:
        prod = poly_mul(prod, cyclotomic_polynomial(d))
    quot, rem = poly_divmod(xn_minus_1, prod)
    if rem:
        raise RuntimeError(f"cyclotomic division for n={n} left a remainder")
    return quot


@functools.lru_cache(maxsize=None)
def power_residues(n: int, jmax: int) -> tuple[IntPoly, ...]:
    """Residues of x^j mod Phi_n for j = 0..jmax, padded to deg Phi_n.

    Each residue is returned as a full coefficient tuple of length
    ``deg Phi_n`` so they can be combined positionally.
    """
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    res: list[IntPoly] = []
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    res.append(tuple(cur))
    for _ in range(jmax):
        lead = cur[-1] if deg > 0 else 0
        cur = [0] + cur[:-1]
        if lead:
            # x * x^{deg-1} = x^deg = -(phi - x^deg), phi being monic
            for k in range(deg):
                cur[k] -= lead * phi[k]
        res.append(tuple(cur))
    return tuple(res)


def _validate_signs(eps: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(e) for e in eps)
    if not out:
        raise ValueError("sign vector is empty")
    if any(e not in (-1, 1) for e in out):
        raise ValueError(f"sign vector entries must be +1 or -1, got {out}")
    return out


def sign_sum_is_zero(eps: Sequence[int]) -> bool:
    """Exact test of ``sum_j eps_j zeta^j = 0`` with ``zeta = exp(i*pi/m)``.

    >>> sign_sum_is_zero((1, -1, 1))
    True
    >>> sign_sum_is_zero((1, 1, 1))
    False
    """
    e = _validate_signs(eps)
    m = len(e)
    res = power_residues(2 * m, m)
    deg = len(res[0])
    acc = [0] * deg
    for j, s in enumerate(e, start=1):
        rj = res[j]
        for k in range(deg):
            acc[k] += s * rj[k]
    return not any(acc)


def sign_sum_numeric(eps: Sequence[int]) -> float:
    """Floating absolute value of the signed root-of-unity sum."""
    e = _validate_signs(eps)
    m = len(e)
    zeta = cmath.exp(1j * math.pi / m)
    return abs(sum(s * zeta ** j for j, s in enumerate(e, start=1)))
