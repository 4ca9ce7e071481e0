"""Enumeration of vanishing sign patterns up to symmetry.

The solution set of the vanishing-sum problem is closed under two
generators: the twisted shift ``S(eps) = (eps_2, ..., eps_m, -eps_1)``
(rotation of the associated polygon) and the reversal ``R`` (reflection).
They satisfy ``R^2 = S^{2m} = id`` and ``S^k R = R S^{2m-k}``, so the
group they generate has at most ``4m`` elements and every orbit is
``{R^a S^b : a in {0,1}, b in 0..2m-1}`` applied to one vector.

Enumeration walks all ``2^m`` sign vectors with the exact cyclotomic
test, then buckets solutions by canonical orbit representative
(lexicographic minimum under the encoding +1 -> 0, -1 -> 1).
"""

from __future__ import annotations

import dataclasses
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Sequence

import numpy as np

from .cyclotomic import power_residues, sign_sum_is_zero

SignVector = tuple[int, ...]

# Exhaustive enumeration is exponential in m; this cap keeps runs at
# desk scale and is an arbitrary, adjustable guard.
M_CAP = 30

_CHUNK_BITS = 16


class MTooLarge(ValueError):
    """m exceeds the documented enumeration cap."""


def shift(eps: Sequence[int]) -> SignVector:
    """Twisted shift S: drop the head, append its negation."""
    e = tuple(eps)
    return e[1:] + (-e[0],)


def flip(eps: Sequence[int]) -> SignVector:
    """Reversal R."""
    return tuple(reversed(eps))


def encode(eps: Sequence[int]) -> tuple[int, ...]:
    """Order-defining encoding: +1 -> 0, -1 -> 1."""
    return tuple(0 if s == 1 else 1 for s in eps)


def orbit(eps: Sequence[int]) -> set[SignVector]:
    """All distinct images of eps under the symmetry group."""
    out: set[SignVector] = set()
    cur = tuple(eps)
    for _ in range(2 * len(cur)):
        out.add(cur)
        out.add(flip(cur))
        cur = shift(cur)
    return out


def canonical_form(eps: Sequence[int]) -> SignVector:
    """Lexicographically minimal orbit member under ``encode``."""
    return min(orbit(eps), key=encode)


def is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def has_odd_factor(m: int) -> bool:
    return m >= 1 and not is_power_of_two(m)


def worker_count() -> int:
    """Worker cap from OPTIFRAME_THREADS, default available parallelism."""
    raw = os.environ.get("OPTIFRAME_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        n = os.cpu_count() or 1
    return n


@dataclasses.dataclass(frozen=True)
class SignClass:
    """One equivalence class of solutions."""

    canonical: SignVector
    orbit_size: int
    raw_count: int
    members: tuple[SignVector, ...] | None = None


def _validate_m(m: int) -> None:
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if m > M_CAP:
        raise MTooLarge(f"m={m} exceeds the enumeration cap {M_CAP}")


def _residue_matrix(m: int) -> np.ndarray:
    rows = power_residues(2 * m, m)[1:]
    mat = [[c for c in row] for row in rows]
    if max(abs(c) for row in mat for c in row) >= 1 << 40:
        raise RuntimeError("residue coefficients too large for int64 scan")
    return np.asarray(mat, dtype=np.int64)


def _solutions_in_chunk(start: int, stop: int, m: int, mat: np.ndarray) -> list[SignVector]:
    idx = np.arange(start, stop, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(m, dtype=np.int64)) & 1
    signs = 1 - 2 * bits  # bit 0 -> +1
    hit = ~np.any(signs @ mat, axis=1)
    return [tuple(int(s) for s in row) for row in signs[hit]]


def iter_solutions(m: int) -> Iterator[SignVector]:
    """Exact solutions in ascending index order (bit j encodes eps_{j+1})."""
    _validate_m(m)
    mat = _residue_matrix(m)
    total = 1 << m
    step = 1 << _CHUNK_BITS
    chunks = [(s, min(s + step, total)) for s in range(0, total, step)]
    workers = min(worker_count(), len(chunks))
    if workers <= 1:
        for start, stop in chunks:
            yield from _solutions_in_chunk(start, stop, m, mat)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map preserves chunk order, keeping the merge deterministic
        for found in pool.map(lambda c: _solutions_in_chunk(*c, m, mat), chunks):
            yield from found


def enumerate_solution_classes(m: int, keep_members: bool = False) -> list[SignClass]:
    """Solution classes for length m, sorted by canonical representative."""
    buckets: dict[SignVector, list[SignVector]] = {}
    for eps in iter_solutions(m):
        buckets.setdefault(canonical_form(eps), []).append(eps)
    classes = [
        SignClass(
            canonical=canon,
            orbit_size=len(orbit(canon)),
            raw_count=len(members),
            members=tuple(members) if keep_members else None,
        )
        for canon, members in buckets.items()
    ]
    classes.sort(key=lambda c: encode(c.canonical))
    return classes


def class_count(m: int) -> int:
    """Number of solution classes (0 when m is a power of two)."""
    return len(enumerate_solution_classes(m))


def raw_solution_count(m: int) -> int:
    _validate_m(m)
    return sum(1 for _ in iter_solutions(m))


def classes_json(m: int, classes: Sequence[SignClass]) -> dict:
    """JSON-ready summary of an enumeration run."""
    return {
        "m": m,
        "classes": [
            {
                "canonical": list(c.canonical),
                "orbit_size": c.orbit_size,
                "raw_count": c.raw_count,
            }
            for c in classes
        ],
        "raw_total": sum(c.raw_count for c in classes),
    }


def _slow_solutions(m: int) -> list[SignVector]:
    """Per-vector exact scan; reference path for tests."""
    _validate_m(m)
    out = []
    for idx in range(1 << m):
        eps = tuple(1 - 2 * ((idx >> j) & 1) for j in range(m))
        if sign_sum_is_zero(eps):
            out.append(eps)
    return out
