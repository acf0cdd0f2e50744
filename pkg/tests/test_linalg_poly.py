from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qgrass.linalg import count_subspaces_cells, is_prime, iter_subspaces, nullspace, rank, rref
from qgrass.poly import IntPolynomial, chi_from_polynomial, lagrange, q_binomial


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def _all_subspaces(n, k, p):
    """Independent oracle: RREF of every k-tuple of vectors, deduplicated."""
    seen = set()
    vecs = list(product(range(p), repeat=n))
    for rows in product(vecs, repeat=k):
        R, piv = rref(rows, p)
        if len(piv) == k:
            seen.add(tuple(map(tuple, R)))
    return seen


@pytest.mark.parametrize("n,k,p", [(2, 1, 2), (3, 1, 2), (3, 2, 3), (4, 2, 2), (3, 0, 5)])
def test_subspace_enumeration_matches_oracle(n, k, p):
    got = [tuple(map(tuple, R)) for R in iter_subspaces(n, k, p)]
    assert len(got) == len(set(got))
    assert set(got) == _all_subspaces(n, k, p)
    assert len(got) == q_binomial(n, k)(p) == count_subspaces_cells(n, k, p)


def test_q_binomial_values():
    assert q_binomial(2, 1).coeffs == (1, 1)
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert q_binomial(3, 4).is_zero()
    for n in range(7):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)


@given(st.lists(st.lists(st.integers(0, 6), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    p = 7
    r = rank(rows, p)
    ns = nullspace(rows, 4, p)
    assert r + len(ns) == 4
    for v in ns:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) % p == 0


def test_polynomial_basics():
    P = IntPolynomial([1, 1, 0, 0])
    assert P.coeffs == (1, 1) and P.degree == 1
    assert P(5) == 6 and chi_from_polynomial(P) == 2
    assert chi_from_polynomial(IntPolynomial()) == 0
    assert chi_from_polynomial(IntPolynomial([1, 1, 1])) == 3
    assert str(IntPolynomial([1, -2, 3])) == "3*t^2 - 2*t + 1"
    assert (P * P).coeffs == (1, 2, 1)


@settings(max_examples=50)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5))
def test_lagrange_recovers_polynomial(coeffs):
    P = IntPolynomial(coeffs)
    pts = [(x, P(x)) for x in (2, 3, 5, 7, 11)]
    got = lagrange(pts)
    assert [c for c in got] == [Fraction(c) for c in coeffs] + [Fraction(0)] * (5 - len(coeffs))
