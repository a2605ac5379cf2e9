import pytest

from diffpoly import (
    Algebra,
    LeibnizViolation,
    apply_power,
    derivation_from_images,
    extend_from_generators,
    free_nilpotent_algebra,
    inner_derivation,
    is_locally_nilpotent,
    local_nilpotency_index,
    make_derivation,
    zero_derivation,
)
from diffpoly.derivation import derivative_chain


def test_inner_u_matrix(H, d_u):
    # columns are images: u -> 0, v -> w, w -> 0
    assert d_u == make_derivation(H, [[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    assert d_u.nil_index == 2
    assert d_u.is_nilpotent


def test_zero_derivation_valid(H):
    d = zero_derivation(H)
    assert d.nil_index == 1
    assert is_locally_nilpotent(d, 5)


def test_leibniz_violation_at_u_v(H):
    with pytest.raises(LeibnizViolation) as info:
        make_derivation(H, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert info.value.pair == ("u", "v")
    assert str(info.value.right) == "w"


def test_inner_derivations(H, huvw):
    assert inner_derivation(H.zero()) == zero_derivation(H)
    F = free_nilpotent_algebra(1, 2)
    assert inner_derivation(F.generator(0)) == zero_derivation(F)


def test_apply_power(d_u, huvw):
    u, v, w = huvw
    assert apply_power(d_u, v, 1) == w
    assert apply_power(d_u, v, 0) == v
    assert apply_power(d_u, v, 2).is_zero()
    assert derivative_chain(d_u, v) == [v, w]


def test_local_nilpotency_index(H, d_u, huvw):
    u, v, w = huvw
    assert local_nilpotency_index(d_u, v, 10) == 1
    assert local_nilpotency_index(d_u, u + v, 10) == 1
    assert local_nilpotency_index(d_u, u, 10) == 0
    assert local_nilpotency_index(d_u, H.zero(), 10) == 0


def test_local_nilpotency(d_u):
    assert is_locally_nilpotent(d_u, 5)
    E = Algebra(["e"], {(0, 0): [1]})
    assert is_locally_nilpotent(zero_derivation(E), 5)
    # d(e) = c e forces c = 2c, so the only derivation of the idempotent line is zero
    with pytest.raises(LeibnizViolation):
        make_derivation(E, [[1]])


def test_non_nilpotent_derivation():
    # the Euler derivation t -> t, tt -> 2 tt is not nilpotent
    F = free_nilpotent_algebra(1, 2)
    d = extend_from_generators(F, [F.generator(0)])
    assert d.images[1] == F.basis_element(1).scale(2)
    assert not d.is_nilpotent
    assert not is_locally_nilpotent(d, 5)
    assert local_nilpotency_index(d, F.generator(0), 20) is None


def test_extend_from_generators_is_a_derivation():
    F = free_nilpotent_algebra(2, 3)
    a, b = F.generator(0), F.generator(1)
    d = extend_from_generators(F, [b, a * b])
    assert d(a * b) == d(a) * b + a * d(b)
    assert d == derivation_from_images(F, d.images)
