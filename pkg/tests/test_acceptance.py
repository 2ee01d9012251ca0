"""Acceptance criteria, one test per criterion. All comparisons are exact.

A PASS/FAIL line per criterion is printed in the terminal summary (see conftest).
"""

import random
from fractions import Fraction

import pytest

from ehrcomb import ehrhart as eh
from ehrcomb import identities as ids
from ehrcomb.exactpoly import linear_coeff, shift
from ehrcomb.numbers import bernoulli, stirling2
from ehrcomb.poset import Poset, adjoin_max, bicomb_over, comb_over, make_antichain, make_chain
from ehrcomb.stirlingperm import second_eulerian_enumerated, second_eulerian_recurrence

from conftest import small_posets
from oracles import h_bruteforce


def _all_pass(reports):
    failed = [r.to_json() for r in reports if not r.passed]
    assert not failed, failed


def test_criterion_01_first_bernoulli_eulerian_identity():
    reports = [ids.verify_theorem_1_1_first(n) for n in range(1, 13)]
    _all_pass(reports)
    assert all("enumeration" in r.provenance for r in reports[:8])
    assert all("recurrence" in r.provenance for r in reports[8:])
    # the enumerated table agrees with the recurrence where both exist
    assert all(second_eulerian_enumerated(n) == second_eulerian_recurrence(n) for n in range(1, 9))
    assert second_eulerian_enumerated(8) == (1, 494, 19950, 195800, 644020, 785304, 341136, 40320)


def test_criterion_02_second_bernoulli_eulerian_identity():
    reports = [ids.verify_theorem_1_1_second(n) for n in range(1, 13)]
    _all_pass(reports)
    assert reports[0].lhs == Fraction(1, 2)
    assert reports[2].lhs == Fraction(7, 12)


def test_criterion_03_comb_values_are_stirling2():
    reports = [ids.verify_prop_4_1(n, k) for n in range(11) for k in range(1, 11)]
    _all_pass(reports)
    brute = [r for r in reports if "lattice_bruteforce" in r.details]
    assert len(brute) == 4 * 7
    for r in reports:
        n, k = r.parameter
        assert r.lhs == stirling2(n + k, k)


def test_criterion_04_comb_hstar_three_way():
    reports = [ids.verify_prop_h(n) for n in range(1, 6)]
    _all_pass(reports)
    assert reports[2].lhs[:3] == (1, 8, 6)


def test_criterion_05_comb_linear_coefficients():
    reports = [ids.verify_linear_coeff_comb(n) for n in range(1, 13)]
    _all_pass(reports)
    for n, r in enumerate(reports, start=1):
        assert r.rhs[0] == bernoulli(n) / n


def _coeffs_direct(h):
    poly = eh.polynomial_from_hstar(h)
    return linear_coeff(shift(poly, -1)), linear_coeff(poly)


def test_criterion_06_coefficients_from_hstar(corpus):
    rng = random.Random(20240601)
    checked = 0
    for d in range(1, 9):
        for _ in range(50):
            h = [1] + [rng.randint(0, 20) for _ in range(d)]
            assert (eh.lemF_shifted(h), eh.lemF_unshifted(h)) == _coeffs_direct(h)
            checked += 1
    for p in corpus:
        if p.size == 0:
            continue
        data = eh.ehrhart_data(p)
        h = data.hstar.padded(p.size + 1)
        assert eh.lemF_shifted(h) == data.linear_coeff_shifted
        assert eh.lemF_unshifted(h) == data.linear_coeff
        checked += 1
    assert checked > 400


def test_criterion_07_corpus_invariants(corpus):
    assert len(corpus) > 100
    for p in corpus:
        data = eh.ehrhart_data(p)
        poly = data.polynomial
        for k in range(1, 11):
            assert eh.order_polynomial_value(p, k) == poly(k - 1)
        for k in range(1, 4):
            assert eh.order_polynomial_bruteforce(p, k) == poly(k - 1)
        assert data.hstar[0] == 1
        if p.size:
            assert poly(-1) == 0
            assert data.hstar[p.size] == 0


def test_criterion_08_bicomb_fast_path():
    blocks = small_posets()
    checked = 0
    for p in blocks:
        for r in blocks:
            for n in range(1, 8):
                if n * (p.size + r.size + 1) > 7:
                    continue
                q = bicomb_over(p, r, n)
                for k in range(6):
                    assert eh.comb_ehrhart_fast(p, r, n, k) == eh.order_polynomial_value(q, k + 1)
                    checked += 1
    assert checked > 100
    ac2 = make_antichain(2)
    for n in range(1, 5):
        q = comb_over(ac2, n)
        for k in range(7):
            squares = [(i + 1) ** 2 for i in range(k + 1)]
            expected = h_bruteforce(n, squares)
            assert eh.comb_ehrhart_fast(ac2, Poset(0), n, k) == expected
            assert eh.order_polynomial_value(q, k + 1) == expected


def test_criterion_09_general_comb_coefficients():
    for p in (make_chain(1), make_chain(2), make_antichain(2)):
        n = 1
        while n * (p.size + 1) <= 7:
            _all_pass([ids.verify_general_comb(p, n)])
            n += 1
    ac2 = make_antichain(2)
    for n in range(1, 6):
        shifted, unshifted = eh.comb_linear_coeffs(ac2, n)
        assert shifted == bernoulli(2 * n) / n
        assert unshifted == 2 * n + sum((bernoulli(2 * i) / i for i in range(1, n + 1)), Fraction(0))


def test_criterion_10_open_comb_stirling1():
    reports = [ids.verify_open_comb(n, width=7) for n in range(1, 6)]
    _all_pass(reports)
    assert all(len(r.lhs) == 7 for r in reports)


@pytest.mark.parametrize("nk", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)], ids=lambda t: "n%d-k%d" % t)
def test_criterion_11_rgf_correspondence(nk):
    _all_pass([ids.verify_rgf_correspondence(*nk)])


@pytest.mark.parametrize("kr", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)], ids=lambda t: "k%d-r%d" % t)
def test_criterion_12_stirling_poset(kr):
    _all_pass([ids.verify_stirling_poset(*kr)])


def test_criterion_13_pyramid_consistency(corpus):
    small = [p for p in corpus if p.size <= 6]
    _all_pass([ids.verify_pyramid(p) for p in small])
    # one case checked directly: pyramid over a 2-chain is a 3-chain
    assert eh.ehrhart_polynomial(adjoin_max(make_chain(2))) == eh.ehrhart_polynomial(make_chain(3))
    first = ids.explore_pyramid(6)
    assert ids.explore_pyramid(6) == first
    assert [row["n"] for row in first] == list(range(1, 7))
