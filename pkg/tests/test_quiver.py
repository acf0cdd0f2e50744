from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qgrass.quiver import Arrow, Quiver, QuiverError, a_linear, box, parse_dim


def test_topological_order(A2, K):
    assert A2.topological_order() == [1, 2]
    assert K.topological_order() == [1, 2]
    assert A2.opposite().topological_order() == [2, 1]


def test_cycles_rejected():
    with pytest.raises(QuiverError):
        Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 2, 1)))
    with pytest.raises(QuiverError):
        Quiver((1,), (Arrow("loop", 1, 1),))


def test_duplicate_arrow_ids_rejected():
    with pytest.raises(QuiverError):
        Quiver((1, 2), (Arrow("a", 1, 2), Arrow("a", 1, 2)))


def test_euler_form(A2, K):
    assert A2.euler_form((0, 1), (1, 0)) == 0
    assert K.euler_form((1, 2), (1, 1)) == 1
    assert K.euler_form((0, 0), (3, 4)) == 0


def test_projective_injective_dims(A2, K, D4):
    assert A2.dim_projective(1) == (1, 1)
    assert A2.dim_projective(2) == (0, 1)
    assert A2.dim_injective(2) == (1, 1)
    assert K.dim_projective(1) == (1, 2)
    assert K.dim_injective(2) == (2, 1)
    assert D4.dim_projective(1) == (1, 0, 0, 1)
    assert D4.dim_injective(4) == (1, 1, 1, 1)


def test_coxeter(A2, K):
    assert A2.coxeter_inverse_apply((0, 1)) == (1, 0)
    assert A2.coxeter_inverse_apply((1, 0)) == (-1, -1)
    assert K.coxeter_inverse_apply((0, 1)) == (2, 3)
    assert K.coxeter_inverse_apply((1, 2)) == (3, 4)


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_coxeter_roundtrip_d4(v):
    from qgrass.quiver import d4_subspace

    Q = d4_subspace()
    assert Q.coxeter_apply(Q.coxeter_inverse_apply(v)) == tuple(v)


def test_coxeter_sends_projective_to_minus_injective(D4):
    # Phi(dim P_i) = -dim I_i
    for v in D4.vertices:
        assert D4.coxeter_apply(D4.dim_projective(v)) == tuple(-x for x in D4.dim_injective(v))


def test_bmatrix(A2, K):
    assert A2.bmatrix() == [[0, 1], [-1, 0]]
    assert K.bmatrix() == [[0, 2], [-2, 0]]
    assert Quiver((1,), ()).bmatrix() == [[0]]


def test_json_roundtrip(K):
    assert Quiver.loads(K.dumps()) == K
    assert Quiver.from_dict({"vertices": [2, 1], "arrows": [{"id": "x", "src": 2, "tgt": 1}]}).vertices == (1, 2)


def test_malformed_json():
    with pytest.raises(QuiverError):
        Quiver.from_dict({"arrows": []})
    with pytest.raises(QuiverError):
        Quiver.from_dict({"vertices": [1], "arrows": [{"id": "a", "src": 1, "tgt": 7}]})


def test_box_and_parse():
    pts = list(box((1, 2)))
    assert len(pts) == 6 and pts[0] == (0, 0) and pts[-1] == (1, 2)
    assert parse_dim(" 1,2 ") == (1, 2)
    with pytest.raises(ValueError):
        a_linear(3).check_dim((1, 2))
