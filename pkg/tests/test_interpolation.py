import pytest

from diffpoly import DuplicatePoint, InconsistentSamples, PreconditionViolated, RValuedPolynomial
from diffpoly import evaluate, interpolate, is_identically_zero, sample


def test_evaluate(H, huvw):
    w = huvw[2]
    assert evaluate(RValuedPolynomial(H, [H.zero(), w]), 5) == w.scale(5)
    assert evaluate(RValuedPolynomial(H, []), 7).is_zero()
    assert evaluate(RValuedPolynomial(H, [w, H.zero(), w]), 2) == w.scale(5)


def test_interpolate(H, huvw):
    w = huvw[2]
    f = interpolate([(2, w.scale(2)), (3, w.scale(3))], 1)
    assert f == RValuedPolynomial(H, [H.zero(), w])
    g = interpolate([(1, w.scale(2)), (2, w.scale(5)), (3, w.scale(10))], 2)
    assert g.coefficients == (w, H.zero(), w)
    assert interpolate([(p, H.zero()) for p in range(3)], 2).is_zero()
    assert g.degree == 2 and RValuedPolynomial(H, [H.zero()]).degree == -1


def test_is_identically_zero(H, huvw):
    w = huvw[2]
    assert is_identically_zero([(p, H.zero()) for p in range(4)], 3)
    assert not is_identically_zero([(2, w.scale(2)), (3, w.scale(3))], 1)


def test_errors(H, huvw):
    w = huvw[2]
    with pytest.raises(DuplicatePoint):
        interpolate([(1, w), (1, w)], 1)
    with pytest.raises(PreconditionViolated):
        interpolate([(1, w)], 1)
    with pytest.raises(InconsistentSamples):
        interpolate([(1, w), (2, w), (3, w.scale(2))], 1)


def test_sample_round_trip(H, huvw):
    u, v, w = huvw
    f = RValuedPolynomial(H, [u, v.scale(3), w])
    assert interpolate(sample(f, [0, 1, 2, 5]), 2) == f
