"""Ehrhart polynomials and h*-vectors of order polytopes.

Lattice points of the k-th dilate of O(P) are order-preserving maps
P -> {0, ..., k}, so Ehr(k) = Omega_P(k + 1). Polynomials are obtained by
interpolating exact counts at k = 0..|P|; h*-vectors are then read off with
the finite-difference formula, never the other way round.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import BadHZero, NonIntegral, ZeroDimension
from .exactpoly import (
    Polynomial,
    binomial_poly,
    discrete_sum,
    e_elementary,
    h_complete,
    interpolate_values,
    linear_coeff,
    shift,
)
from .numbers import binomial, harmonic
from .poset import Poset, _topological_order


@dataclass(frozen=True)
class HStarVector:
    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int]):
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, j: int) -> int:
        return self.entries[j] if 0 <= j < len(self.entries) else 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def padded(self, length: int) -> list[int]:
        return list(self.entries) + [0] * (length - len(self.entries))


# --- counting ----------------------------------------------------------------

def order_polynomial_value(p: Poset, k: int) -> int:
    """Omega_P(k): order-preserving maps P -> {1, ..., k}.

    Elements are placed in a fixed linear-extension order; each one ranges from
    the largest value among its lower covers up to k. Partial assignments are
    merged on the values still needed by unplaced elements (the frontier), so
    the cost depends on the frontier width rather than on k^|P|.
    """
    if p.size == 0:
        return 1
    if k <= 0:
        return 0
    order = _topological_order(p.size, p.covers)
    position = {v: i for i, v in enumerate(order)}
    lower = [p.lower_covers(v) for v in range(p.size)]
    # step after which each element leaves the frontier
    last_needed = [
        max((position[w] for w in p.upper_covers(v)), default=-1) for v in range(p.size)
    ]
    frontier: tuple[int, ...] = ()
    states: dict[tuple[int, ...], int] = {(): 1}
    for step, v in enumerate(order):
        idx = [frontier.index(u) for u in lower[v]]
        keep = [i for i, u in enumerate(frontier) if last_needed[u] > step]
        new_frontier = tuple(frontier[i] for i in keep)
        stays = last_needed[v] > step
        if stays:
            new_frontier += (v,)
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for vals, cnt in states.items():
            lb = max((vals[i] for i in idx), default=1)
            base = tuple(vals[i] for i in keep)
            if stays:
                for x in range(lb, k + 1):
                    nxt[base + (x,)] += cnt
            elif lb <= k:
                nxt[base] += cnt * (k - lb + 1)
        states, frontier = nxt, new_frontier
    return sum(states.values())


def order_polynomial_bruteforce(p: Poset, k: int) -> int:
    """Omega_P(k) by checking all k^|P| maps. Test oracle only."""
    rel = p.relations()
    return sum(
        1
        for f in itertools.product(range(1, k + 1), repeat=p.size)
        if all(f[a] <= f[b] for a, b in rel)
    )


def lattice_count_bruteforce(p: Poset, k: int) -> int:
    """Lattice points of k*O(P) by scanning {0..k}^|P|. Test oracle only."""
    rel = p.relations()
    return sum(
        1
        for x in itertools.product(range(k + 1), repeat=p.size)
        if all(x[a] <= x[b] for a, b in rel)
    )


def interior_count_bruteforce(p: Poset, k: int) -> int:
    """Interior lattice points of k*O(P): strict inequalities 0 < x_a < x_b < k."""
    rel = p.relations()
    return sum(
        1
        for x in itertools.product(range(1, k), repeat=p.size)
        if all(x[a] < x[b] for a, b in rel)
    )


# --- polynomials and h* -------------------------------------------------------

@lru_cache(maxsize=None)
def ehrhart_polynomial(p: Poset) -> Polynomial:
    """Ehr_{O(P)}, interpolated from Omega_P(k + 1) at k = 0..|P|."""
    if p.size == 0:
        return Polynomial([1])
    return interpolate_values([order_polynomial_value(p, k + 1) for k in range(p.size + 1)])


def hstar_from_polynomial(poly: Polynomial, d: int) -> HStarVector:
    """h*_j = sum_i (-1)^i C(d+1, i) p(j - i), for j = 0..d."""
    if not poly.is_zero and poly.degree > d:
        raise ValueError(f"degree {poly.degree} exceeds dimension {d}")
    values = [poly(j) for j in range(d + 1)]
    out = []
    for j in range(d + 1):
        s = sum(
            ((-1) ** i * binomial(d + 1, i) * values[j - i] for i in range(j + 1)),
            Fraction(0),
        )
        if s.denominator != 1:
            raise NonIntegral(f"h*_{j} = {s} is not an integer")
        out.append(int(s))
    return HStarVector(out)


def polynomial_from_hstar(h: Sequence[int] | HStarVector) -> Polynomial:
    """sum_j h*_j C(x + d - j, d)."""
    h = list(h)
    d = len(h) - 1
    total = Polynomial()
    for j, hj in enumerate(h):
        if hj:
            total = total + binomial_poly(d - j, d) * hj
    return total


def reciprocity_interior(poly: Polynomial, d: int) -> Polynomial:
    """Interior-count polynomial (-1)^d p(-x)."""
    sign = -1 if d % 2 else 1
    return Polynomial(c * sign * (-1 if i % 2 else 1) for i, c in enumerate(poly.coeffs))


def lemF_shifted(h: Sequence[int] | HStarVector) -> Fraction:
    """[x] Ehr(x - 1) from the h*-vector alone."""
    h = list(h)
    d = len(h) - 1
    if d < 1:
        raise ZeroDimension("needs dimension d >= 1")
    head = (-1) ** (d - 1) * h[d] * harmonic(d)
    tail = sum((Fraction((-1) ** j * h[j], binomial(d - 1, j)) for j in range(d)), Fraction(0))
    return head + tail / d


def lemF_unshifted(h: Sequence[int] | HStarVector) -> Fraction:
    """[x] Ehr(x) from the h*-vector; requires h*_0 = 1."""
    h = list(h)
    d = len(h) - 1
    if d < 1:
        raise ZeroDimension("needs dimension d >= 1")
    if h[0] != 1:
        raise BadHZero(f"h*_0 must be 1, got {h[0]}")
    tail = sum(
        (Fraction((-1) ** (j - 1) * h[j], binomial(d - 1, j - 1)) for j in range(1, d + 1)),
        Fraction(0),
    )
    return harmonic(d) + tail / d


@dataclass(frozen=True)
class EhrhartData:
    poset: Poset
    dim: int
    polynomial: Polynomial
    hstar: HStarVector

    @property
    def linear_coeff(self) -> Fraction:
        return linear_coeff(self.polynomial)

    @property
    def linear_coeff_shifted(self) -> Fraction:
        return linear_coeff(shift(self.polynomial, -1))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "ehrhart": self.polynomial.to_json(),
            "hstar": list(self.hstar.entries),
        }


def ehrhart_data(p: Poset) -> EhrhartData:
    poly = ehrhart_polynomial(p)
    return EhrhartData(p, p.size, poly, hstar_from_polynomial(poly, p.size))


# --- comb specializations -------------------------------------------------------

def comb_ehrhart_fast(p: Poset, r: Poset, n: int, k: int) -> int:
    """Ehr of O(bicomb_n(P, R)) at k, as h_n(x_0..x_k) with x_i = Ehr_P(i) Ehr_R(k-i)."""
    ep, er = ehrhart_polynomial(p), ehrhart_polynomial(r)
    vals = [ep(i) * er(k - i) for i in range(k + 1)]
    return int(h_complete(n, vals))


def comb_ehrhart_polynomial_fast(p: Poset, r: Poset, n: int) -> Polynomial:
    d = n * (p.size + r.size + 1)
    return interpolate_values([comb_ehrhart_fast(p, r, n, k) for k in range(d + 1)])


def interior_value(p: Poset, c: int) -> Fraction:
    """Interior lattice points of c*O(P), by reciprocity on Ehr_P."""
    return reciprocity_interior(ehrhart_polynomial(p), p.size)(c)


def open_comb_ehrhart_fast(p: Poset, n: int, k: int) -> int:
    """Interior lattice points of k*O(comb_n(P)) as e_n over interior counts of P.

    Connectors satisfy 0 < c_1 < ... < c_n < k; each copy of P lies strictly
    inside the dilate c_i*O(P).
    """
    vals = [interior_value(p, c) for c in range(1, k)]
    return int(e_elementary(n, vals))


def stirling_poset_ehrhart_fast(k: int, r: int, dilation: int) -> int:
    """Ehr of O(stirling_poset(k, r)) at ``dilation``.

    Sums over weakly increasing spine values, weighting the first spine element
    of each segment by v + 1 for the tooth below it.
    """
    if r == 1:
        return (dilation + 1) ** k
    size = dilation + 1
    f = [1] + [0] * dilation  # virtual start at value 0
    for seg in range(k):
        for j in range(r - 1):
            acc, g = 0, [0] * size
            for v in range(size):
                acc += f[v]
                g[v] = acc * (v + 1 if j == 0 else 1)
            f = g
    return sum(f)


def stirling_poset_ehrhart_polynomial(k: int, r: int) -> Polynomial:
    return interpolate_values([stirling_poset_ehrhart_fast(k, r, t) for t in range(k * r + 1)])


def s_polynomial(p: Poset, i: int) -> Polynomial:
    """S_i with S_i(k) = sum_{j=0}^{k} Ehr_P(j)^i."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return discrete_sum(ehrhart_polynomial(p) ** i)


def comb_linear_coeffs(p: Poset, n: int) -> tuple[Fraction, Fraction]:
    """([x] Ehr(x-1), [x] Ehr(x)) for O(comb_n(P)), from S-polynomials only."""
    if n < 1:
        raise ValueError("n must be >= 1")
    shifted = linear_coeff(shift(s_polynomial(p, n), -1)) / n
    unshifted = sum((linear_coeff(s_polynomial(p, i)) / i for i in range(1, n + 1)), Fraction(0))
    return shifted, unshifted

