"""Bernoulli, Faulhaber, harmonic, binomial and Stirling numbers.

Bernoulli numbers use the convention B_1 = +1/2 throughout.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .errors import IndexTooSmall, NegativeIndex
from .exactpoly import Polynomial, interpolate_values

_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """B_n from B_n = 1 - 1/(n+1) * sum_{j<n} C(n+1, j) B_j, memoized."""
    if n < 0:
        raise NegativeIndex(f"Bernoulli index must be >= 0, got {n}")
    with _bernoulli_lock:
        table = _bernoulli_table
        for m in range(len(table), n + 1):
            s = sum((math.comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
            table.append(1 - s / (m + 1))
        return table[n]


def bernoulli_table(n: int) -> list[Fraction]:
    bernoulli(n)
    return list(_bernoulli_table[: n + 1])


@lru_cache(maxsize=None)
def faulhaber(n: int) -> Polynomial:
    """F_n with F_n(k) = 1^n + ... + k^n, by interpolating n+2 partial sums."""
    if n < 1:
        raise IndexTooSmall(f"Faulhaber index must be >= 1, got {n}")
    sums, acc = [], 0
    for k in range(n + 2):
        acc += k**n if k else 0
        sums.append(acc)
    return interpolate_values(sums)


def harmonic(n: int) -> Fraction:
    if n < 0:
        raise NegativeIndex(f"harmonic index must be >= 0, got {n}")
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1) + (0,)
    return tuple(
        (k * prev[k] if k < len(prev) else 0) + (prev[k - 1] if k else 0)
        for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1) + (0,)
    return tuple(
        (n - 1) * prev[k] + (prev[k - 1] if k else 0) for k in range(n + 1)
    )


def stirling2(n: int, k: int) -> int:
    """Set partitions of an n-set into k blocks."""
    if n < 0 or k < 0:
        raise NegativeIndex("Stirling indices must be non-negative")
    if k > n:
        return 0
    return _stirling2_row(n)[k]


def stirling1_unsigned(n: int, k: int) -> int:
    """Permutations of n elements with exactly k cycles."""
    if n < 0 or k < 0:
        raise NegativeIndex("Stirling indices must be non-negative")
    if k > n:
        return 0
    return _stirling1_row(n)[k]


def stirling_triangle(kind: str, rows: int) -> list[list[int]]:
    row = {"second": _stirling2_row, "first_unsigned": _stirling1_row}[kind]
    return [list(row(n)) for n in range(rows + 1)]
