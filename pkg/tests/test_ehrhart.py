from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ehrcomb import ehrhart as eh
from ehrcomb.errors import BadHZero, NonIntegral, ZeroDimension
from ehrcomb.exactpoly import Polynomial, h_complete, linear_coeff, shift
from ehrcomb.numbers import bernoulli, faulhaber, stirling1_unsigned, stirling2
from ehrcomb.poset import (
    Poset,
    bicomb_over,
    comb_over,
    count_linear_extensions,
    descent_enumerator,
    make_antichain,
    make_chain,
    make_comb,
    stirling_poset,
)

from conftest import small_posets
from oracles import lagrange, order_maps

SINGLETON = make_chain(1)
EMPTY = Poset(0)


def test_order_polynomial_examples():
    assert eh.order_polynomial_value(make_antichain(2), 2) == 4
    assert eh.order_polynomial_value(make_comb(1), 2) == 3
    assert eh.order_polynomial_value(EMPTY, 0) == 1
    assert eh.order_polynomial_value(SINGLETON, 0) == 0
    # Omega(k) = Ehr(k-1): three lattice points in {0 <= y <= x <= 1}
    assert eh.lattice_count_bruteforce(make_comb(1), 1) == 3


def test_order_polynomial_against_map_scan(corpus):
    for p in corpus:
        for k in range(1, 5):
            if k ** p.size > 20000:
                break
            assert eh.order_polynomial_value(p, k) == order_maps(p.size, p.relations(), 1, k)


def test_ehrhart_polynomial_examples():
    assert eh.ehrhart_polynomial(EMPTY) == Polynomial([1])
    assert eh.ehrhart_polynomial(make_antichain(2)) == Polynomial([1, 2, 1])
    expected = Polynomial(lagrange([(0, 1), (1, 3), (2, 6)]))
    assert eh.ehrhart_polynomial(make_comb(1)) == expected
    assert eh.ehrhart_polynomial(make_chain(3)) == Polynomial(lagrange([(k, comb(k + 3, 3)) for k in range(4)]))


def test_hstar_examples():
    assert eh.hstar_from_polynomial(Polynomial([1, 1]), 1).entries == (1, 0)
    assert eh.hstar_from_polynomial(eh.ehrhart_polynomial(make_comb(2)), 4).entries == (1, 2, 0, 0, 0)
    h = eh.hstar_from_polynomial(Polynomial([1, 2, 1]), 2)
    assert h.entries == (1, 1, 0)
    # sum of h* = d! * volume = d! * leading coefficient
    assert sum(h) == factorial(2) * 1
    with pytest.raises(NonIntegral):
        eh.hstar_from_polynomial(Polynomial([1, Fraction(1, 2)]), 1)


def test_reciprocity_examples():
    q = eh.reciprocity_interior(eh.ehrhart_polynomial(make_comb(1)), 2)
    assert q == Polynomial(lagrange([(1, 0), (2, 0), (3, 1)]))
    assert [q(k) for k in (1, 2, 3)] == [eh.interior_count_bruteforce(make_comb(1), k) for k in (1, 2, 3)]
    assert shift(q, 1) == Polynomial([0, Fraction(-1, 2), Fraction(1, 2)])  # C(x, 2)
    for x in range(1, 8):
        assert shift(q, 1)(x) == stirling1_unsigned(x, x - 1)
    seg = eh.reciprocity_interior(Polynomial([1, 1]), 1)
    assert [seg(k) for k in range(1, 5)] == [0, 1, 2, 3]


def test_reciprocity_against_interior_scan(corpus):
    for p in corpus:
        if p.size == 0 or p.size > 5:
            continue
        q = eh.reciprocity_interior(eh.ehrhart_polynomial(p), p.size)
        for k in range(1, 5):
            assert q(k) == eh.interior_count_bruteforce(p, k)


def test_lemF_examples():
    assert eh.lemF_shifted([1, 0]) == 1
    assert eh.lemF_unshifted([1, 0]) == 1
    assert eh.lemF_shifted([1, 2, 0, 0, 0]) == Fraction(1, 12) == bernoulli(2) / 2
    assert eh.lemF_unshifted([1, 2, 0, 0, 0]) == Fraction(31, 12)
    assert eh.lemF_unshifted([1, 2, 0, 0, 0]) == 2 + bernoulli(1) + bernoulli(2) / 2
    with pytest.raises(ZeroDimension):
        eh.lemF_shifted([1])
    with pytest.raises(BadHZero):
        eh.lemF_unshifted([2, 1])


hvectors = st.integers(1, 8).flatmap(
    lambda d: st.lists(st.integers(0, 20), min_size=d, max_size=d).map(lambda t: [1] + t)
)


@given(hvectors)
def test_lemF_against_reconstruction(h):
    p = eh.polynomial_from_hstar(h)
    assert eh.lemF_shifted(h) == linear_coeff(shift(p, -1))
    assert eh.lemF_unshifted(h) == linear_coeff(p)
    assert eh.hstar_from_polynomial(p, len(h) - 1).entries == tuple(h)


def test_ehrhart_invariants_on_corpus(corpus):
    for p in corpus:
        data = eh.ehrhart_data(p)
        poly = data.polynomial
        assert poly(0) == 1
        assert data.hstar[0] == 1
        assert all(e >= 0 for e in data.hstar)
        if p.size:
            assert poly.degree == p.size
            assert poly(-1) == 0
            assert data.hstar[p.size] == 0
        assert eh.polynomial_from_hstar(data.hstar) == poly
        assert sum(data.hstar) == count_linear_extensions(p)
        for k in range(1, 11):
            assert eh.order_polynomial_value(p, k) == poly(k - 1)


def test_hstar_is_descent_enumerator(corpus):
    for p in corpus:
        data = eh.ehrhart_data(p)
        assert data.hstar.padded(p.size + 1) == descent_enumerator(p) + [0] * (p.size + 1 - len(descent_enumerator(p)))


def test_comb_fast_examples():
    for n in range(5):
        for k in range(6):
            assert eh.comb_ehrhart_fast(EMPTY, EMPTY, n, k) == comb(n + k, n)
            assert eh.comb_ehrhart_fast(EMPTY, EMPTY, n, k) == eh.ehrhart_polynomial(make_chain(n))(k)
            assert eh.comb_ehrhart_fast(SINGLETON, EMPTY, n, k) == stirling2(n + k + 1, k + 1)
            squares = [(i + 1) ** 2 for i in range(k + 1)]
            assert eh.comb_ehrhart_fast(make_antichain(2), EMPTY, n, k) == h_complete(n, squares)


def test_comb_fast_against_counting():
    blocks = small_posets()
    for p in blocks:
        for r in blocks:
            for n in range(1, 8):
                q = bicomb_over(p, r, n)
                if q.size > 7:
                    break
                for k in range(6):
                    assert eh.comb_ehrhart_fast(p, r, n, k) == eh.order_polynomial_value(q, k + 1)


def test_open_comb_examples():
    assert eh.open_comb_ehrhart_fast(SINGLETON, 1, 3) == 1
    assert eh.open_comb_ehrhart_fast(SINGLETON, 1, 1) == 0
    for n in range(1, 4):
        ehr = eh.ehrhart_polynomial(make_comb(n))
        for k in range(1, 7):
            assert eh.open_comb_ehrhart_fast(SINGLETON, n, k) == ehr(-k)


def test_open_comb_against_interior_scan():
    for p in (EMPTY, SINGLETON, make_antichain(2), make_chain(2)):
        for n in range(1, 3):
            q = comb_over(p, n)
            if q.size > 6:
                continue
            for k in range(1, 5):
                assert eh.open_comb_ehrhart_fast(p, n, k) == eh.interior_count_bruteforce(q, k)


def test_s_polynomial_examples():
    for n in range(1, 6):
        assert eh.s_polynomial(SINGLETON, n) == shift(faulhaber(n), 1)
        assert eh.s_polynomial(make_antichain(2), n) == shift(faulhaber(2 * n), 1)
    assert eh.s_polynomial(EMPTY, 1) == Polynomial([1, 1])


def test_s_polynomial_partial_sums():
    for p in (EMPTY, SINGLETON, make_chain(2), make_antichain(2), make_comb(1)):
        ehr = eh.ehrhart_polynomial(p)
        for i in range(1, 5):
            s = eh.s_polynomial(p, i)
            acc = 0
            for k in range(13):
                acc += ehr(k) ** i
                assert s(k) == acc


def test_comb_linear_coeffs_examples():
    for n in range(1, 7):
        bsum = sum(bernoulli(j) / j for j in range(1, n + 1))
        assert eh.comb_linear_coeffs(SINGLETON, n) == (bernoulli(n) / n, n + bsum)
        b2sum = sum(bernoulli(2 * i) / i for i in range(1, n + 1))
        assert eh.comb_linear_coeffs(make_antichain(2), n) == (bernoulli(2 * n) / n, 2 * n + b2sum)
    assert eh.comb_linear_coeffs(EMPTY, 1) == (1, 1)


def test_stirling_poset_fast_path():
    for k in range(1, 4):
        for r in range(1, 4):
            p = stirling_poset(k, r)
            for t in range(5):
                assert eh.stirling_poset_ehrhart_fast(k, r, t) == eh.order_polynomial_value(p, t + 1)


def test_ehrhart_data_json():
    data = eh.ehrhart_data(make_antichain(2))
    assert data.to_json() == {"dim": 2, "ehrhart": ["1", "2", "1"], "hstar": [1, 1, 0]}
