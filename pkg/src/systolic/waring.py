"""Minimal decompositions of integers into sums of d-th powers.

A dynamic program over 1..k gives provably minimal part counts; the table
for each exponent d is cached and grown on demand.  Greedy decomposition is
kept only as an upper-bound helper (it is suboptimal in general, e.g. for
96 = 6 * 2^4 the greedy answer 81 + 15 * 1 uses 16 parts instead of 6).
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

DEFAULT_CAP = 10_000_000
_CAP_ENV = "SYSTOLIC_WARING_CAP"


def desk_cap() -> int:
    """Largest k the dynamic program will accept (override via env var)."""
    raw = os.environ.get(_CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


class WaringCapError(ValueError):
    """k exceeds the configured desk-scale cap."""


@dataclass(frozen=True)
class WaringDecomposition:
    """k = sum of parts[i]^d with a minimal number of parts."""

    k: int
    d: int
    parts: tuple[int, ...]

    def __post_init__(self):
        # exact big-integer re-verification of every decomposition
        if sum(p ** self.d for p in self.parts) != self.k:
            raise ValueError(f"parts {self.parts} do not sum to {self.k} under d={self.d}")
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive integers")

    @property
    def count(self) -> int:
        return len(self.parts)


# per-exponent DP tables: d -> list of minimal counts for 0..built limit
_tables: dict[int, list[int]] = {}


def _table(d: int, upto: int) -> list[int]:
    counts = _tables.setdefault(d, [0])
    if len(counts) > upto:
        return counts
    powers = []
    base = 1
    while base ** d <= upto:
        powers.append(base ** d)
        base += 1
    start = len(counts)
    counts.extend([0] * (upto + 1 - start))
    for i in range(start, upto + 1):
        best = i  # all ones is always available
        for p in powers:
            if p > i:
                break
            candidate = counts[i - p] + 1
            if candidate < best:
                best = candidate
        counts[i] = best
    return counts


def min_count(k: int, d: int) -> int:
    """Minimal number of d-th powers summing to k."""
    _validate(k, d)
    return _table(d, k)[k]


def min_powers(k: int, d: int) -> WaringDecomposition:
    """A minimal decomposition, parts in non-increasing order.

    Tie-break: the largest feasible part is taken first, so among minimal
    decompositions the returned one is lexicographically largest.
    """
    _validate(k, d)
    counts = _table(d, k)
    parts: list[int] = []
    remaining = k
    while remaining:
        target = counts[remaining] - 1
        base = math.floor(remaining ** (1 / d)) + 1
        while base ** d > remaining:
            base -= 1
        while counts[remaining - base ** d] != target:
            base -= 1
        parts.append(base)
        remaining -= base ** d
    return WaringDecomposition(k, d, tuple(parts))


def degrees_for_class(k: int, d: int) -> list[int]:
    """Homothety degrees a_i with sum a_i^d = k for the wedge-map representation."""
    return list(min_powers(k, d).parts)


def greedy_parts(k: int, d: int) -> list[int]:
    """Greedy largest-power-first decomposition; an upper bound, not minimal."""
    _validate(k, d)
    parts = []
    remaining = k
    while remaining:
        base = math.floor(remaining ** (1 / d)) + 1
        while base ** d > remaining:
            base -= 1
        parts.append(base)
        remaining -= base ** d
    return parts


@dataclass(frozen=True)
class FourthPowerReport:
    """Scan result: max minimal count for k <= limit and where it is attained."""

    limit: int
    max_count: int
    argmax: tuple[int, ...]
    within_19: bool


def verify_g4(limit: int) -> FourthPowerReport:
    """Check that every k <= limit needs at most 19 fourth powers."""
    _validate(limit, 4)
    counts = _table(4, limit)
    max_count = max(counts[1: limit + 1])
    argmax = tuple(k for k in range(1, limit + 1) if counts[k] == max_count)
    return FourthPowerReport(limit, max_count, argmax, max_count <= 19)


def _validate(k: int, d: int) -> None:
    if d < 2:
        raise ValueError("exponent d must be at least 2")
    if k < 1:
        raise ValueError("k must be a positive integer")
    cap = desk_cap()
    if k > cap:
        raise WaringCapError(
            f"k={k} exceeds the desk-scale cap {cap}; raise {_CAP_ENV} to override"
        )
