from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from qgrass.cluster import Seed, cc_map, denominator_vector, enumerate_cluster_variables, explore, mutate_matrix, mutate_seed, mutate_sequence
from qgrass.grass import chi_projective, chi_simple, chi_table_bruteforce
from qgrass.laurent import InexactDivision, LaurentPoly

x1 = LaurentPoly.var(2, 0)
x2 = LaurentPoly.var(2, 1)
one = LaurentPoly.const(2)


def laurent(n=2):
    term = st.tuples(st.tuples(*[st.integers(-3, 3)] * n), st.integers(-4, 4))
    return st.lists(term, max_size=5).map(lambda ts: LaurentPoly(n, dict(ts)))


@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a - a == LaurentPoly(2)


@settings(max_examples=80)
@given(laurent(), laurent())
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_inexact_division_detected():
    with pytest.raises(InexactDivision):
        (one + x1).exact_div(one + x2)
    with pytest.raises(InexactDivision):
        (x1 * 3 + one).exact_div(x1 * 2 + one)


def test_canonical_strings():
    assert ((one + x2) * x1 ** -1).canonical() == "(1+x2)/x1"
    assert ((one + x1 + x2) * (x1 * x2) ** -1).canonical() == "(1+x1+x2)/(x1*x2)"
    assert x1.canonical() == "x1"
    assert LaurentPoly(2).canonical() == "0"
    assert (x1 * x1 * 2 - one).canonical() == "-1+2*x1^2"


def test_matrix_mutation():
    assert mutate_matrix([[0, 1], [-1, 0]], 0) == ((0, -1), (1, 0))
    assert mutate_matrix([[0, 2], [-2, 0]], 1) == ((0, -2), (2, 0))
    B = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
    assert mutate_matrix(mutate_matrix(B, 1), 1) == tuple(map(tuple, B))
    with pytest.raises(ValueError):
        mutate_matrix([[0, 1], [1, 0]], 0)


@st.composite
def antisymmetric(draw):
    n = draw(st.integers(2, 4))
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(i + 1, n):
            v = draw(st.integers(-3, 3))
            B[i][k], B[k][i] = v, -v
    return B


@given(antisymmetric(), st.data())
def test_matrix_mutation_involutive_and_antisymmetric(B, data):
    j = data.draw(st.integers(0, len(B) - 1))
    C = mutate_matrix(B, j)
    assert all(C[i][k] == -C[k][i] for i in range(len(B)) for k in range(len(B)))
    assert mutate_matrix(C, j) == tuple(map(tuple, B))


@settings(max_examples=30, deadline=None)
@given(antisymmetric(), st.lists(st.integers(0, 3), max_size=3), st.data())
def test_seed_mutation_involutive(B, seq, data):
    n = len(B)
    s = Seed(tuple(LaurentPoly.var(n, i) for i in range(n)), B)
    s = mutate_sequence(s, [j % n for j in seq])
    j = data.draw(st.integers(0, n - 1))
    back = mutate_seed(mutate_seed(s, j), j)
    assert back.cluster == s.cluster and back.bmatrix == s.bmatrix


def test_a2_exchange(A2):
    s = mutate_seed(Seed.initial(A2), 0)
    assert s.cluster[0] == (one + x2).exact_div(x1)
    assert mutate_sequence(Seed.initial(A2), [0, 1, 0, 1, 0]).key() == Seed.initial(A2).key()


def test_enumeration_counts(A2, A3, K):
    names = {u.canonical() for u in enumerate_cluster_variables(A2, 5)}
    assert names == {"x1", "x2", "(1+x2)/x1", "(1+x1+x2)/(x1*x2)", "(1+x1)/x2"}
    assert len(enumerate_cluster_variables(A3, 9)) == 9
    sizes = [len(enumerate_cluster_variables(K, d)) for d in range(5)]
    assert sizes == [2, 4, 6, 8, 10]
    assert explore(K, 4).anomalies == []


def test_cc_map(A2):
    assert cc_map(A2, chi_simple(A2, 1)).canonical() == "(1+x2)/x1"
    assert cc_map(A2, chi_simple(A2, 2)).canonical() == "(1+x1)/x2"
    assert cc_map(A2, chi_projective(A2, 1)).canonical() == "(1+x1+x2)/(x1*x2)"
    with pytest.raises(ValueError):
        cc_map(A2, chi_simple(A2, 1), (1, 1))


def test_cc_matches_mutation_kronecker(K):
    from qgrass.kronecker import build_DMn, build_Mn

    variables = {u.canonical() for u in enumerate_cluster_variables(K, 4)}
    for M in (build_Mn(n) for n in range(3)):
        X = cc_map(K, chi_table_bruteforce(M, [2, 3, 5, 7], extend=True))
        assert X.canonical() in variables and X.nonnegative()
        assert denominator_vector(X) == M.dims
    for M in (build_DMn(n) for n in range(3)):
        assert cc_map(K, chi_table_bruteforce(M, [2, 3, 5, 7], extend=True)).canonical() in variables


def test_denominator_vectors():
    assert denominator_vector((one + x2) * x1 ** -1) == (1, 0)
    assert denominator_vector(x1) == (-1, 0)
    with pytest.raises(ValueError):
        denominator_vector(LaurentPoly(2))
