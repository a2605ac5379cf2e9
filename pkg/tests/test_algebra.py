from fractions import Fraction

import pytest

from diffpoly import (
    Algebra,
    AssociativityViolation,
    DimensionMismatch,
    ParentMismatch,
    SizeExceeded,
    Subspace,
    algebra_nilpotency_index,
    binomial,
    element_nilpotency_index,
    free_nilpotent_algebra,
    make_algebra,
    mul_elements,
    power,
    subalgebra_closure,
    subspace_contains,
    to_rational,
)


def test_heisenberg_table(H, huvw):
    u, v, w = huvw
    assert H.dim == 3
    assert H.labels == ("u", "v", "w")
    assert u * v == w
    assert v * u == H.zero()
    for x in huvw:
        for y in huvw:
            if (x, y) != (u, v):
                assert (x * y).is_zero()


def test_idempotent_line_is_valid():
    E = Algebra(["e"], {(0, 0): [1]})
    e = E.basis_element(0)
    assert e * e == e


def test_associativity_defect_names_triple():
    # e1 e1 = e2, e2 e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = e1 e2 = 0
    with pytest.raises(AssociativityViolation) as info:
        Algebra(["e1", "e2"], {(0, 0): [0, 1], (1, 0): [1, 0]})
    assert info.value.triple == ("e1", "e1", "e1")


def test_dense_constructor_matches_sparse(H):
    dense = H.structure_constants()
    assert make_algebra(3, dense, ["u", "v", "w"]) == H
    with pytest.raises(DimensionMismatch):
        make_algebra(2, dense, ["u", "v"])


def test_products(H, huvw):
    u, v, w = huvw
    a = u + v
    assert mul_elements(u, v) == w
    assert a * a == w
    assert a * H.zero() == H.zero()
    assert power(a, 2) == w
    assert power(a, 3) == H.zero()
    assert power(a, 1) == a
    assert a ** 2 == w


def test_mixed_parents_rejected(H):
    F = free_nilpotent_algebra(1, 2)
    with pytest.raises(ParentMismatch):
        H.basis_element(0) * F.basis_element(0)


def test_element_construction_and_printing(H):
    x = H.element({"v": 3, "w": "-1/2"})
    assert x.coords == (0, 3, Fraction(-1, 2))
    assert str(x) == "3*v - 1/2*w"
    assert str(H.zero()) == "0"
    assert H.element([0, 1, 0]) == H.basis_element("v")
    with pytest.raises(DimensionMismatch):
        H.element([1, 2])


def test_floats_refused(H):
    with pytest.raises(TypeError):
        H.element([0.5, 0, 0])
    with pytest.raises(ValueError):
        to_rational("0.5")


def test_subalgebra_closure(H, huvw):
    u, v, w = huvw
    assert subalgebra_closure([v, w]) == Subspace(H, [v.coords, w.coords])
    assert subalgebra_closure([v, w]).dim == 2
    assert subalgebra_closure([H.zero()]).dim == 0
    closure = subalgebra_closure([u + v])
    assert closure == Subspace(H, [(u + v).coords, w.coords])


def test_subspace_contains(H, huvw):
    u, v, w = huvw
    s = Subspace(H, [v.coords, w.coords])
    assert subspace_contains(s, v.scale(3) - w.scale(Fraction(1, 2)))
    assert not subspace_contains(s, u)
    assert subspace_contains(s, H.zero())
    assert H.zero() in Subspace(H, [])


def test_nilpotency_indices(H, huvw):
    u, v, w = huvw
    assert element_nilpotency_index(u + v, 10) == 3
    assert element_nilpotency_index(H.zero(), 10) == 1
    E = Algebra(["e"], {(0, 0): [1]})
    assert element_nilpotency_index(E.basis_element(0), 10) is None
    assert algebra_nilpotency_index(H, 10) == 3
    assert algebra_nilpotency_index(E, 10) is None


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3


def test_free_nilpotent_shapes():
    F12 = free_nilpotent_algebra(1, 2)
    t, tt = F12.basis()
    assert F12.labels == ("t", "tt")
    assert t * t == tt
    assert (t * tt).is_zero()
    assert free_nilpotent_algebra(2, 2).labels == ("a", "b", "aa", "ab", "ba", "bb")
    F11 = free_nilpotent_algebra(1, 1)
    assert F11.dim == 1 and (F11.basis_element(0) ** 2).is_zero()
    assert free_nilpotent_algebra(2, 3).dim == 14
    assert algebra_nilpotency_index(free_nilpotent_algebra(2, 3), 10) == 4


def test_free_nilpotent_cap():
    with pytest.raises(SizeExceeded):
        free_nilpotent_algebra(5, 9)


def test_pickle_round_trip(H, huvw):
    import pickle

    F = free_nilpotent_algebra(2, 2)
    assert pickle.loads(pickle.dumps(F)) == F
    assert pickle.loads(pickle.dumps(H)) == H
    x = huvw[0] + huvw[2]
    assert pickle.loads(pickle.dumps(x)) == x
