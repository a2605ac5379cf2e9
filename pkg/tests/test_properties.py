"""Property-based checks of the ring axioms and the main identities."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from diffpoly import (
    OrePoly,
    RValuedPolynomial,
    bi_ore_mul,
    commute_power,
    conjugate,
    embed_weyl,
    evaluate,
    free_nilpotent_algebra,
    heisenberg_algebra,
    interpolate,
    ore_mul,
    quasi_inverse_horner,
    quasi_inverse_nilpotent,
    sample,
    verify_quasi_inverse,
)
from diffpoly.generators import random_nilpotent_derivation
from diffpoly.ore import x_times

H = heisenberg_algebra()
F = free_nilpotent_algebra(2, 3)
D_F = random_nilpotent_derivation(F, random.Random(7))

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def elements(algebra):
    return st.lists(st.one_of(st.just(Fraction(0)), rationals), min_size=algebra.dim,
                    max_size=algebra.dim).map(algebra.element)


def ore_polys(d, low=-3, high=4):
    return st.dictionaries(st.integers(low, high), elements(d.parent), max_size=3).map(lambda t: OrePoly(d, t))


settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@given(elements(F), elements(F), elements(F), rationals)
def test_algebra_bilinear_associative(x, y, z, q):
    assert (x + y) * z == x * z + y * z
    assert x * (y + z) == x * y + x * z
    assert (x.scale(q)) * y == (x * y).scale(q) == x * y.scale(q)
    assert (x * y) * z == x * (y * z)


@given(elements(F), elements(F))
def test_leibniz(x, y):
    assert D_F(x * y) == D_F(x) * y + x * D_F(y)


@given(ore_polys(D_F), ore_polys(D_F), ore_polys(D_F))
def test_ore_mul_associative(p, q, r):
    assert ore_mul(ore_mul(p, q), r) == ore_mul(p, ore_mul(q, r))


@given(ore_polys(D_F), ore_polys(D_F), ore_polys(D_F))
def test_ore_mul_distributive(p, q, r):
    assert ore_mul(p, q + r) == ore_mul(p, q) + ore_mul(p, r)
    assert ore_mul(p + q, r) == ore_mul(p, r) + ore_mul(q, r)


@given(elements(F), st.integers(0, 8))
def test_closed_form_matches_single_steps(a, n):
    p = OrePoly.constant(D_F, a)
    for _ in range(n):
        p = x_times(p)
    assert commute_power(n, a, D_F) == p


@given(ore_polys(D_F), st.integers(-4, 4), st.integers(-4, 4))
def test_conjugation_is_an_action(p, i, j):
    assert conjugate(conjugate(p, i), j) == conjugate(p, i + j)
    x_i = OrePoly.x(D_F, i)
    assert conjugate(p, i) == ore_mul(ore_mul(x_i, p), OrePoly.x(D_F, -i))


@given(ore_polys(D_F, 1, 4))
def test_quasi_inverse_unique_across_orders(r):
    # R is nilpotent, so every polynomial with coefficients in R is nilpotent
    res = quasi_inverse_nilpotent(r, 64)
    assert verify_quasi_inverse(r, res.inverse)
    assert quasi_inverse_horner(r, 64, side="left") == res.inverse
    assert quasi_inverse_horner(r, 64, side="right") == res.inverse


@given(ore_polys(D_F, -3, 3))
def test_quasi_inverse_commutes_with_conjugation(r):
    t = quasi_inverse_nilpotent(r, 64).inverse
    assert quasi_inverse_nilpotent(conjugate(r, 2), 64).inverse == conjugate(t, 2)


@given(elements(F), elements(F))
def test_weyl_embedding_multiplicative(a, b):
    assert embed_weyl(a * b, D_F) == bi_ore_mul(embed_weyl(a, D_F), embed_weyl(b, D_F))


@given(st.lists(elements(H), max_size=5), st.lists(st.integers(-20, 20), min_size=6, max_size=8, unique=True))
def test_interpolation_round_trip(coeffs, points):
    f = RValuedPolynomial(H, coeffs)
    assert interpolate(sample(f, points), 5) == f
    assert all(evaluate(f, p) == val for p, val in sample(f, points))
