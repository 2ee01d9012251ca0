"""Verification suites.

Each ``verify_*`` function computes both sides of an identity along separate
computational routes and returns an :class:`IdentityReport`. Bernoulli numbers
on the left-hand sides always come from the recursion, never from Faulhaber
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from . import ehrhart as eh
from .errors import SizeExceeded
from .exactpoly import discrete_sum, h_complete, linear_coeff, rational_str, shift
from .numbers import bernoulli, binomial, harmonic, stirling1_unsigned, stirling2
from .poset import (
    Poset,
    adjoin_max,
    comb_over,
    descent_enumerator,
    make_chain,
    make_comb,
    stirling_poset,
)
from .stirlingperm import (
    ENUMERATION_THRESHOLD,
    des,
    ordered_by_jth_occurrence,
    rgf_enumerate,
    rgf_to_jth_word,
    second_eulerian_with_path,
    stirling_descent_vector,
)

Value = Union[Fraction, int, tuple]

#: brute-force caps; callers may raise them explicitly
POSET_CAP = 7
RGF_CAP = 12
STIRLING_POSET_CAP = 9

SINGLETON = make_chain(1)


def _json_value(v: Any) -> Any:
    if isinstance(v, (tuple, list)):
        return [_json_value(x) for x in v]
    if isinstance(v, bool):
        return v
    if isinstance(v, (Fraction, int)):
        return rational_str(v)
    return v


@dataclass
class IdentityReport:
    name: str
    parameter: Any
    lhs: Value
    rhs: Value
    provenance: str
    details: dict = field(default_factory=dict)
    extra_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and self.extra_ok

    def to_json(self) -> dict:
        param = list(self.parameter) if isinstance(self.parameter, tuple) else self.parameter
        return {
            "name": self.name,
            "parameter": param,
            "lhs": _json_value(self.lhs),
            "rhs": _json_value(self.rhs),
            "pass": self.passed,
            "provenance": self.provenance,
            "details": {k: _json_value(v) for k, v in self.details.items()},
        }


# --- Bernoulli and second Eulerian numbers ---------------------------------------

def verify_theorem_1_1_first(n: int, threshold: int = ENUMERATION_THRESHOLD) -> IdentityReport:
    """2 B_n = sum_{j<n} (-1)^j <<n, j>> / C(2n-1, j)."""
    row, path = second_eulerian_with_path(n, threshold)
    rhs = sum(
        (Fraction((-1) ** j * row[j], binomial(2 * n - 1, j)) for j in range(n)), Fraction(0)
    )
    return IdentityReport(
        "theorem1.1-first", n, 2 * bernoulli(n), rhs,
        f"lhs: Bernoulli recursion; rhs: second Eulerian row by {path}",
    )


def verify_theorem_1_1_second(n: int, threshold: int = ENUMERATION_THRESHOLD) -> IdentityReport:
    """sum_{j<=n} B_j/j = H_{2n} - n + 1/(2n) sum_{j=1}^{n-1} (-1)^{j-1} <<n,j>> / C(2n-1, j-1)."""
    row, path = second_eulerian_with_path(n, threshold)
    lhs = sum((bernoulli(j) / j for j in range(1, n + 1)), Fraction(0))
    tail = sum(
        (Fraction((-1) ** (j - 1) * row[j], binomial(2 * n - 1, j - 1)) for j in range(1, n)),
        Fraction(0),
    )
    rhs = harmonic(2 * n) - n + tail / (2 * n)
    return IdentityReport(
        "theorem1.1-second", n, lhs, rhs,
        f"lhs: Bernoulli recursion; rhs: harmonic numbers + second Eulerian row by {path}",
    )


# --- comb polytope ------------------------------------------------------------------

def verify_prop_4_1(n: int, k: int, brute_n: int = 3, brute_k: int = 7) -> IdentityReport:
    """Ehr_{P_n}(k-1) = h_n(1..k) = {n+k, k}."""
    comb = make_comb(n)
    lhs = int(eh.ehrhart_polynomial(comb)(k - 1))
    rhs = int(h_complete(n, range(1, k + 1)))
    s2 = stirling2(n + k, k)
    details: dict = {"stirling2": s2}
    ok = s2 == rhs
    prov = "lhs: interpolated Ehrhart polynomial of the comb; rhs: h_n(1..k); cross-check {n+k,k}"
    if n <= brute_n and k <= brute_k:
        brute = eh.lattice_count_bruteforce(comb, k - 1)
        details["lattice_bruteforce"] = brute
        ok = ok and brute == lhs
        prov += " and lattice-point scan"
    return IdentityReport("prop4.1", (n, k), lhs, rhs, prov, details, ok)


def verify_prop_h(n: int) -> IdentityReport:
    """h* of the comb polytope = <<n, .>> = descent enumerator of the comb poset."""
    d = 2 * n
    poly = eh.comb_ehrhart_polynomial_fast(SINGLETON, Poset(0), n)
    hstar = tuple(eh.hstar_from_polynomial(poly, d).padded(d + 1))
    row, path = second_eulerian_with_path(n)
    eul = tuple(row + [0] * (d + 1 - len(row)))
    desc = descent_enumerator(make_comb(n))
    desc = tuple(desc + [0] * (d + 1 - len(desc)))
    return IdentityReport(
        "prop_h", n, hstar, eul,
        f"lhs: h* from the h_n-specialized Ehrhart polynomial; rhs: second Eulerian by {path}; "
        "third: linear-extension descents",
        {"descent_enumerator": desc}, desc == eul,
    )


def verify_linear_coeff_comb(n: int) -> IdentityReport:
    """[x]Ehr_{P_n}(x-1) = B_n/n and [x]Ehr_{P_n}(x) = n + sum B_j/j."""
    poly = eh.ehrhart_polynomial(make_comb(n))
    shifted = linear_coeff(shift(poly, -1))
    unshifted = linear_coeff(poly)
    b_shift = bernoulli(n) / n
    b_unshift = n + sum((bernoulli(j) / j for j in range(1, n + 1)), Fraction(0))
    row, _ = second_eulerian_with_path(n)
    h = row + [0] * (n + 1)
    lf1, lf2 = eh.lemF_shifted(h), eh.lemF_unshifted(h)
    ok = unshifted == b_unshift and lf1 == b_shift and lf2 == b_unshift
    return IdentityReport(
        "linear-coeff-comb", n, (b_shift, b_unshift), (shifted, unshifted),
        "lhs: Bernoulli recursion; rhs: coefficients of the interpolated Ehrhart polynomial; "
        "also coefficient formulas applied to the second Eulerian row",
        {"lemF_shifted": lf1, "lemF_unshifted": lf2}, ok,
    )


def verify_general_comb(p: Poset, n: int, cap: int = POSET_CAP) -> IdentityReport:
    """S-polynomial coefficients vs. direct extraction on comb_n(P)."""
    size = n * (p.size + 1)
    if size > cap:
        raise SizeExceeded("comb_n(P) direct path", size, cap)
    poly = eh.ehrhart_polynomial(comb_over(p, n))
    direct = (linear_coeff(shift(poly, -1)), linear_coeff(poly))
    fast = eh.comb_linear_coeffs(p, n)
    return IdentityReport(
        "general-comb", (p.size, n), fast, direct,
        "lhs: S-polynomials of Ehr_P; rhs: Ehrhart polynomial of the explicit comb poset",
        {"poset": p.to_json()},
    )


def verify_open_comb(n: int, width: int = 7) -> IdentityReport:
    """Interior count of (x+1) P_n = [x, x-n] for x = n..n+width-1."""
    d = 2 * n
    interior = eh.reciprocity_interior(eh.ehrhart_polynomial(make_comb(n)), d)
    xs = range(n, n + width)
    lhs = tuple(int(interior(x + 1)) for x in xs)
    rhs = tuple(stirling1_unsigned(x, x - n) for x in xs)
    fast = tuple(eh.open_comb_ehrhart_fast(SINGLETON, n, x + 1) for x in xs)
    return IdentityReport(
        "open-comb", n, lhs, rhs,
        "lhs: reciprocity on the Ehrhart polynomial; rhs: unsigned Stirling first kind; "
        "also e_n specialization",
        {"e_n_path": fast}, fast == lhs,
    )


# --- RGFs and higher order ---------------------------------------------------------

def verify_rgf_correspondence(n: int, k: int, cap: int = RGF_CAP) -> IdentityReport:
    """w -> w' maps k-uniform RGFs of length kn bijectively onto S^(k)_{n,k}, keeping des."""
    if k * n > cap:
        raise SizeExceeded("RGF enumeration", k * n, cap)
    rgfs = list(rgf_enumerate(k * n, k))
    images = [rgf_to_jth_word(w, n, k) for w in rgfs]
    target = set(ordered_by_jth_occurrence(n, k, k))
    size = k * n
    hist_rgf = [0] * size
    hist_img = [0] * size
    preserved = True
    for w, v in zip(rgfs, images):
        hist_rgf[des(w)] += 1
        hist_img[des(v)] += 1
        preserved = preserved and des(w) == des(v)
    hist_target = [0] * size
    for v in target:
        hist_target[des(v)] += 1
    injective = len(set(images)) == len(images)
    onto = set(images) == target
    return IdentityReport(
        "rgf-correspondence", (n, k), tuple(hist_rgf), tuple(hist_target),
        "lhs: descents of k-uniform RGFs; rhs: descents of words ordered by k-th occurrence",
        {"count": len(rgfs), "injective": injective, "onto": onto, "descent_preserving": preserved},
        injective and onto and preserved and tuple(hist_img) == tuple(hist_target),
    )


def verify_stirling_poset(k: int, r: int, cap: int = STIRLING_POSET_CAP) -> IdentityReport:
    """h* of O(P^(r)_k) = descent enumerator of order-r Stirling permutations."""
    if k * r > cap:
        raise SizeExceeded("Stirling poset enumeration", k * r, cap)
    d = k * r
    poly = eh.stirling_poset_ehrhart_polynomial(k, r)
    hstar = tuple(eh.hstar_from_polynomial(poly, d).padded(d + 1))
    words = stirling_descent_vector(k, r)
    words = tuple(list(words) + [0] * (d + 1 - len(words)))
    ext = descent_enumerator(stirling_poset(k, r))
    ext = tuple(ext + [0] * (d + 1 - len(ext)))
    return IdentityReport(
        "stirling-poset", (k, r), hstar, words,
        "lhs: h* from the spine-DP Ehrhart polynomial; rhs: descents of order-r Stirling "
        "permutations; third: linear-extension descents",
        {"descent_enumerator": ext}, ext == words,
    )


# --- pyramids (exploratory) ----------------------------------------------------------

def verify_pyramid(p: Poset) -> IdentityReport:
    """Ehr of O(P with a maximum adjoined) = discrete sum of Ehr_{O(P)}."""
    lhs = eh.ehrhart_polynomial(adjoin_max(p))
    rhs = discrete_sum(eh.ehrhart_polynomial(p))
    return IdentityReport(
        "pyramid", p.size, tuple(lhs.coeffs), tuple(rhs.coeffs),
        "lhs: counting on the poset with adjoined maximum; rhs: discrete sum of Ehr_P",
        {"poset": p.to_json()},
    )


def explore_pyramid(n: int) -> list[dict]:
    """[x]Ehr_{Pyr(P_m)}(x-1) and [x]Ehr_{Pyr(P_m)}(x) for m = 1..n. No identity is claimed."""
    rows = []
    for m in range(1, n + 1):
        pyr = discrete_sum(eh.comb_ehrhart_polynomial_fast(SINGLETON, Poset(0), m))
        rows.append({
            "n": m,
            "shifted": linear_coeff(shift(pyr, -1)),
            "unshifted": linear_coeff(pyr),
        })
    return rows
