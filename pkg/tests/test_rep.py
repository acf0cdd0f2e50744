from __future__ import annotations

import pytest

from qgrass.kronecker import build_Mn, build_Mreg
from qgrass.rep import (
    IntRep,
    RepError,
    annihilator,
    count_submodules,
    direct_sum,
    dual_rep,
    enumerate_submodules,
    ext_dim,
    hom_dim,
    injective,
    is_exceptional,
    projective,
    quotient_rep,
    reduce_mod,
    simple,
    subrep_as_rep,
    zero_rep,
)


def test_reduce_mod(K):
    M = IntRep(K, (1, 2), {"a": [[-1], [7]], "b": [[0], [1]]})
    assert reduce_mod(M, 5).matrices["a"] == ((4,), (2,))
    with pytest.raises(RepError):
        reduce_mod(M, 4)


def test_shape_validation(K):
    with pytest.raises(RepError):
        IntRep(K, (1, 2), {"a": [[1, 0]]})
    with pytest.raises(RepError):
        IntRep(K, (1, 1), {"zzz": [[1]]})


def test_json_roundtrip(K):
    M = build_Mn(2)
    assert IntRep.from_dict(M.to_dict()).key() == M.key()


def test_direct_sum(A2):
    X = direct_sum(projective(A2, 2), projective(A2, 1))
    assert X.dims == (1, 2)
    assert direct_sum(simple(A2, 1), zero_rep(A2)).key()[1:] == simple(A2, 1).key()[1:]


def test_projective_injective_dims(D4, K):
    for Q in (D4, K):
        for v in Q.vertices:
            assert projective(Q, v).dims == Q.dim_projective(v)
            assert injective(Q, v).dims == Q.dim_injective(v)


def test_dual(K):
    M = build_Mn(1)
    Qop, D = dual_rep(M)
    assert Qop == K.opposite()
    _, DD = dual_rep(D)
    assert DD.matrices == M.matrices
    Qop, DP = dual_rep(projective(K, 1))
    assert DP.dims == Qop.dim_injective(1)


def test_hom_ext(A2, K):
    S1, S2, P1 = (reduce_mod(X, 3) for X in (simple(A2, 1), simple(A2, 2), projective(A2, 1)))
    assert hom_dim(S1, S1) == 1
    assert hom_dim(S2, P1) == 1
    assert hom_dim(S1, S2) == 0
    assert ext_dim(S1, S2) == 1
    assert ext_dim(P1, S1) == 0 and ext_dim(P1, S2) == 0
    M1 = reduce_mod(build_Mn(1), 3)
    assert ext_dim(M1, M1) == 0
    assert not is_exceptional(build_Mreg(1, 0), 3)
    assert not is_exceptional(direct_sum(simple(A2, 1), simple(A2, 2)), 2)
    assert all(is_exceptional(projective(K, v), 2) for v in K.vertices)


def test_submodule_examples(A1, K):
    M1 = reduce_mod(build_Mn(1), 2)
    assert len(list(enumerate_submodules(M1, (0, 1)))) == 3
    assert list(enumerate_submodules(M1, (1, 1))) == []
    assert len(list(enumerate_submodules(M1, (1, 2)))) == 1
    assert list(enumerate_submodules(M1, (2, 0))) == []
    assert count_submodules(IntRep(A1, (2,), {}, p=2), (1,)) == 3
    M2 = reduce_mod(build_Mn(2), 3)
    assert count_submodules(M2, (1, 2)) == 4
    assert count_submodules(M2, (1, 1)) == 0


def test_enumerated_points_are_closed_and_distinct(K):
    M = reduce_mod(build_Mn(2), 3)
    for e in [(1, 2), (1, 3), (0, 2), (2, 3)]:
        pts = list(enumerate_submodules(M, e))
        assert len({U.key() for U in pts}) == len(pts) == count_submodules(M, e)
        assert all(U.is_closed() and U.dims == e for U in pts)


def test_quotient(A2):
    P1 = reduce_mod(projective(A2, 1), 5)
    (U,) = enumerate_submodules(P1, (0, 1))
    Q = quotient_rep(P1, U)
    assert Q.dims == (1, 0)
    (Z,) = enumerate_submodules(P1, (0, 0))
    assert quotient_rep(P1, Z).matrices == P1.matrices
    (F,) = enumerate_submodules(P1, (1, 1))
    assert quotient_rep(P1, F).dims == (0, 0)
    assert subrep_as_rep(F).matrices == P1.matrices


def test_annihilator_is_submodule_of_dual(K):
    M = reduce_mod(build_Mn(2), 3)
    _, DM = dual_rep(M)
    for U in enumerate_submodules(M, (1, 2)):
        A = annihilator(U, DM)
        assert A.dims == (1, 1) and A.is_closed()
