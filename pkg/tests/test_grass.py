from __future__ import annotations

import pytest

from qgrass import grass
from qgrass.grass import (
    ChiTable,
    NotEnoughPrimes,
    PolynomialityError,
    assert_positive,
    cached_count,
    chi_direct_sum,
    chi_injective,
    chi_projective,
    chi_simple,
    chi_table_bruteforce,
    interpolate_count_polynomial,
)
from qgrass.kronecker import build_Mn
from qgrass.poly import IntPolynomial, q_binomial
from qgrass.quiver import box
from qgrass.rep import IntRep, direct_sum, dual_rep, injective, projective, simple, zero_rep

ALL = [2, 3, 5, 7, 11, 13]


def test_interpolation_examples(K):
    M1 = build_Mn(1)
    assert interpolate_count_polynomial(M1, (0, 1), [2, 3, 5]) == IntPolynomial([1, 1])
    assert interpolate_count_polynomial(M1, (0, 0), [2]) == IntPolynomial([1])
    assert interpolate_count_polynomial(build_Mn(2), (1, 1), [2, 3, 5]).is_zero()


def test_not_enough_primes():
    with pytest.raises(NotEnoughPrimes) as info:
        interpolate_count_polynomial(build_Mn(2), (0, 1), [2, 3])
    assert info.value.required == 4
    P = interpolate_count_polynomial(build_Mn(2), (0, 1), [2, 3], extend=True)
    assert P == q_binomial(3, 1)


def test_polynomiality_failure_names_witness(monkeypatch):
    real = grass.cached_count

    def fake(M, e, p, **kw):
        return real(M, e, p, **kw) + (1 if p == 7 else 0)

    monkeypatch.setattr(grass, "cached_count", fake)
    with pytest.raises(PolynomialityError) as info:
        interpolate_count_polynomial(build_Mn(1), (0, 1), [2, 3, 5, 7])
    assert info.value.witness_prime == 7


def test_gaussian_binomial_oracle(A1):
    # Gr_k(F_q^n) for the one-vertex quiver is the classical Grassmannian
    for n in range(5):
        t = chi_table_bruteforce(IntRep(A1, (n,), {}), ALL[:6], extend=True)
        for k in range(n + 1):
            assert t.polys[(k,)] == q_binomial(n, k)


def test_table_examples(A2, K):
    t = chi_table_bruteforce(projective(A2, 1), ALL[:3])
    assert t.nonzero() == {(0, 0): 1, (0, 1): 1, (1, 1): 1}
    t = chi_table_bruteforce(build_Mn(1), ALL[:4])
    assert t.nonzero() == {(0, 0): 1, (0, 1): 2, (0, 2): 1, (1, 2): 1}
    assert chi_table_bruteforce(zero_rep(K), [2]).nonzero() == {(0, 0): 1}


def test_formula_tables(A2, K):
    assert chi_simple(A2, 1).nonzero() == {(0, 0): 1, (1, 0): 1}
    assert chi_projective(A2, 1).nonzero() == {(0, 0): 1, (0, 1): 1, (1, 1): 1}
    assert chi_projective(K, 1).nonzero() == {(0, 0): 1, (0, 1): 2, (0, 2): 1, (1, 2): 1}
    # I_2 has socle S_2, and any line at vertex 1 generates all of vertex 2
    assert chi_injective(K, 2).nonzero() == {(0, 0): 1, (0, 1): 1, (1, 1): 2, (2, 1): 1}
    assert chi_injective(A2, 2).nonzero() == chi_projective(A2, 1).nonzero()
    s11 = chi_direct_sum(chi_simple(A2, 1), chi_simple(A2, 1))
    assert s11[(1, 0)] == 2
    p22 = chi_direct_sum(chi_projective(A2, 2), chi_projective(A2, 2))
    assert p22[(0, 1)] == 2


@pytest.mark.parametrize("fam", ["A3", "D4", "K"])
def test_projective_injective_formulas_match_bruteforce(fam, A3, D4, K):
    Q = {"A3": A3, "D4": D4, "K": K}[fam]
    for v in Q.vertices:
        assert chi_projective(Q, v).same_values(chi_table_bruteforce(projective(Q, v), ALL, extend=True))
        assert chi_injective(Q, v).same_values(chi_table_bruteforce(injective(Q, v), ALL, extend=True))


def test_direct_sum_formula_matches_bruteforce(A2, K):
    X = direct_sum(simple(A2, 1), projective(A2, 1))
    assert chi_direct_sum(chi_simple(A2, 1), chi_projective(A2, 1)).same_values(
        chi_table_bruteforce(X, ALL, extend=True)
    )
    Y = direct_sum(build_Mn(1), simple(K, 2))
    assert chi_direct_sum(chi_projective(K, 1), chi_simple(K, 2)).same_values(chi_table_bruteforce(Y, ALL, extend=True))


def test_duality_counting_shortcut_is_exact():
    M = build_Mn(3)
    for e in box(M.dims):
        for p in (2, 3):
            assert cached_count(M, e, p) == cached_count(M, e, p, use_duality=False)


def test_positivity(A2):
    assert assert_positive(chi_table_bruteforce(build_Mn(2), ALL, extend=True)) == []
    assert assert_positive(chi_table_bruteforce(projective(A2, 1), ALL)) == []
    bad = ChiTable(A2, (1, 1), {(0, 0): 1, (1, 0): -1}, {(1, 0): IntPolynomial([1, -2])})
    reasons = [v.reason for v in assert_positive(bad)]
    assert any("negative coefficient" in r for r in reasons)


def test_table_roundtrip_and_tsv(K):
    t = chi_table_bruteforce(build_Mn(1), ALL[:4])
    back = ChiTable.from_dict(t.to_dict(), K)
    assert back.nonzero() == t.nonzero() and back.polys == {e: P for e, P in t.polys.items()}
    assert t.to_tsv().splitlines()[0] == "e\tchi\tpoly"


def test_dual_reindexing(K):
    M = build_Mn(2)
    Qop, D = dual_rep(M)
    tD = chi_table_bruteforce(D, ALL, extend=True, use_duality=False)
    tM = chi_table_bruteforce(M, ALL, extend=True, use_duality=False)
    assert tM.reindexed_dual(Qop).same_values(tD)
