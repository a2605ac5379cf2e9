import pytest

from diffpoly import (
    NotNilpotentWithinBound,
    OrePoly,
    PreconditionViolated,
    conjugate,
    conjugated_quasi_inverse,
    quasi_inverse_horner,
    quasi_inverse_nilpotent,
    shifted_conjugate,
    verify_quasi_inverse,
)
from diffpoly.radical import check_uniqueness
from diffpoly.ore import MINUS_INFINITY


@pytest.fixture
def r7(d_u, huvw):
    u, v, w = huvw
    return shifted_conjugate(7, u + v, d_u)


def test_square_zero(d_u, huvw):
    r = OrePoly(d_u, {2: huvw[2]})
    res = quasi_inverse_nilpotent(r, 10)
    assert res.inverse == r and res.nil_index == 2


def test_heisenberg_quasi_inverse(d_u, huvw, r7):
    u, v, w = huvw
    res = quasi_inverse_nilpotent(r7, 10)
    assert res.inverse == OrePoly(d_u, {3: u + v, 2: w.scale(7), 6: w})
    assert res.nil_index == 3
    assert str(res.inverse) == "w*x^6 + u*x^3 + v*x^3 + 7*w*x^2"


def test_zero(d_u):
    z = OrePoly.zero(d_u)
    res = quasi_inverse_nilpotent(z, 10)
    assert res.inverse.is_zero() and res.nil_index == 1
    assert verify_quasi_inverse(z, z)


def test_verify_rejects_perturbation(d_u, huvw, r7):
    good = quasi_inverse_nilpotent(r7, 10).inverse
    assert verify_quasi_inverse(r7, good)
    assert not verify_quasi_inverse(r7, good - OrePoly(d_u, {6: huvw[2]}))


def test_two_orders_agree(r7):
    series = quasi_inverse_nilpotent(r7, 10).inverse
    left = quasi_inverse_horner(r7, 10, side="left")
    right = quasi_inverse_horner(r7, 10, side="right")
    assert check_uniqueness(r7, [series, left, right])
    assert check_uniqueness(r7, [series])


def test_uniqueness_needs_quasi_inverses(d_u, r7):
    with pytest.raises(PreconditionViolated):
        check_uniqueness(r7, [r7])


def test_conjugated(d_u, huvw, r7):
    u, v, w = huvw
    res = conjugated_quasi_inverse(1, r7, 10)
    assert res.inverse.degree() == 6
    assert res.inverse == conjugate(quasi_inverse_nilpotent(r7, 10).inverse, 1)
    r9 = shifted_conjugate(9, v, d_u)
    assert conjugated_quasi_inverse(2, r9, 10).inverse.degree() == quasi_inverse_nilpotent(r9, 10).inverse.degree()
    zero = conjugated_quasi_inverse(4, OrePoly.zero(d_u), 10).inverse
    assert zero.degree() == MINUS_INFINITY


def test_non_nilpotent_detected(d_u, huvw):
    from diffpoly import Algebra, zero_derivation

    E = Algebra(["e"], {(0, 0): [1]})
    r = OrePoly(zero_derivation(E), {2: E.basis_element(0)})
    with pytest.raises(NotNilpotentWithinBound):
        quasi_inverse_nilpotent(r, 8)
