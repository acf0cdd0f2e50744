from __future__ import annotations

import pytest

from qgrass.knitting import chi_preprojective
from qgrass.kronecker import build, build_DMn, build_Mn, build_Mreg, chi_closed_form, kronecker_table
from qgrass.quiver import box
from qgrass.rep import count_submodules, reduce_mod

PRIMES = [2, 3, 5]


def test_constructors():
    M1 = build_Mn(1)
    assert M1.dims == (1, 2) and M1.matrices["a"] == ((1,), (0,)) and M1.matrices["b"] == ((0,), (1,))
    R = build_Mreg(1, 0)
    assert R.dims == (1, 1) and R.matrices["a"] == ((1,),) and R.matrices["b"] == ((0,),)
    assert build_Mn(0).dims == (0, 1)
    assert build_DMn(2).dims == (3, 2)
    with pytest.raises(ValueError):
        build_Mreg(0, 1)
    with pytest.raises(ValueError):
        build("X", 1)


def test_spot_values():
    assert chi_closed_form("M", 1, (0, 1)) == 2
    assert chi_closed_form("M", 2, (1, 2)) == 2
    assert chi_closed_form("M", 2, (1, 1)) == 0
    assert chi_closed_form("M", 2, (5, 5)) == 0


@pytest.mark.parametrize("kind,n,lam", [(k, n, 0) for k in ("M", "DM") for n in range(4)] + [("Mreg", n, l) for n in (1, 2, 3) for l in (0, 1)])
def test_closed_form_matches_bruteforce(kind, n, lam):
    r = kronecker_table(kind, n, PRIMES, lam=lam)
    assert r.mismatches == []


def test_swap_reflection_is_wrong():
    # exchanging e1 and e2 does not relate DM^n to M^n; it fails already at n = 1
    r = kronecker_table("DM", 1, PRIMES)
    assert {tuple(row["e"]) for row in r.errata} >= {(1, 0)}
    assert chi_closed_form("DM", 1, (1, 0), "swap") == 2
    assert chi_closed_form("DM", 1, (1, 0), "duality") == 0


def test_guard():
    with pytest.raises(ValueError):
        kronecker_table("M", 5, PRIMES)


def test_agrees_with_mesh_recursion(K):
    for m, i, n in [(0, 1, 1), (1, 2, 2), (1, 1, 3)]:
        t = chi_preprojective(K, m, i)
        assert all(t[e] == chi_closed_form("M", n, e) for e in box(t.dims))


def test_regular_counts_independent_of_lambda():
    for n in (1, 2):
        for p in (3, 5):
            A, B = reduce_mod(build_Mreg(n, 0), p), reduce_mod(build_Mreg(n, 1), p)
            for e in box(A.dims):
                assert count_submodules(A, e) == count_submodules(B, e)
