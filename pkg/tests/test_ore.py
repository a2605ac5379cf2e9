from fractions import Fraction

import pytest

from diffpoly import (
    BiOrePoly,
    ExponentOverflow,
    NotLocallyNilpotent,
    NTooSmall,
    OrePoly,
    commute_negative,
    commute_power,
    conjugate,
    conjugate_by_power,
    embed_weyl,
    extend_from_generators,
    free_nilpotent_algebra,
    ore_mul,
    ore_pow,
    shifted_conjugate,
    zero_derivation,
)
from diffpoly.ore import MINUS_INFINITY, bi_ore_mul, embed_weyl_x, weyl_y, x_times


def P(d, terms):
    return OrePoly(d, terms)


def test_commute_power(d_u, huvw):
    u, v, w = huvw
    assert commute_power(1, v, d_u) == P(d_u, {1: v, 0: w})
    assert commute_power(0, v, d_u) == OrePoly.constant(d_u, v)
    assert commute_power(3, v, d_u) == P(d_u, {3: v, 2: w.scale(3)})
    assert str(commute_power(3, v, d_u)) == "v*x^3 + 3*w*x^2"


def test_single_step_oracle(d_u, huvw):
    v = huvw[1]
    p = OrePoly.constant(d_u, v)
    for n in range(1, 6):
        p = x_times(p)
        assert p == commute_power(n, v, d_u)


def test_commute_negative(H, d_u, huvw):
    u, v, w = huvw
    got = commute_negative(v, d_u, 1)
    assert got == P(d_u, {-1: v, -2: -w})
    assert ore_mul(OrePoly.x(d_u), got) == OrePoly.constant(d_u, v)
    assert commute_negative(w, d_u, 0) == P(d_u, {-1: w})
    assert commute_negative(u, d_u, 0) == P(d_u, {-1: u})


def test_x_times_v(d_u, huvw):
    u, v, w = huvw
    assert ore_mul(OrePoly.x(d_u), OrePoly.constant(d_u, v)) == P(d_u, {1: v, 0: w})
    assert ore_mul(OrePoly.x(d_u), OrePoly.zero(d_u)).is_zero()


def test_ore_pow_examples(d_u, huvw):
    u, v, w = huvw
    a = u + v
    r = P(d_u, {3: a, 2: w.scale(7)})
    assert ore_pow(r, 2) == P(d_u, {6: w})
    assert ore_pow(r, 3).is_zero()
    assert ore_pow(r, 1) == r
    assert shifted_conjugate(7, a, d_u) == r


def test_conjugate_by_power(d_u, huvw):
    u, v, w = huvw
    assert conjugate_by_power(5, v, d_u) == P(d_u, {0: v, -1: w.scale(5)})
    assert conjugate_by_power(9, u + v, d_u) == P(d_u, {0: u + v, -1: w.scale(9)})
    assert conjugate_by_power(4, u, d_u) == OrePoly.constant(d_u, u)
    with pytest.raises(NTooSmall):
        conjugate_by_power(1, v, d_u)


def test_conjugation_matches_stepwise(d_u, huvw):
    v = huvw[1]
    for n in range(2, 8):
        stepwise = ore_mul(ore_mul(OrePoly.x(d_u, n), OrePoly.constant(d_u, v)), OrePoly.x(d_u, -n))
        assert conjugate_by_power(n, v, d_u) == stepwise
        assert conjugate(OrePoly.constant(d_u, v), n) == stepwise


def test_degrees(d_u, huvw):
    u, v, w = huvw
    p = P(d_u, {3: v, 2: w.scale(3)})
    assert p.degree() == 3 and p.low_degree() == 2
    assert OrePoly.zero(d_u).degree() == MINUS_INFINITY
    q = P(d_u, {0: v, -1: w.scale(5)})
    assert q.degree() == 0 and q.low_degree() == -1
    assert OrePoly.constant(d_u, u).degree() == 0
    assert P(d_u, {6: w}).degree() == 6


def test_coefficient_at(d_u, huvw):
    u, v, w = huvw
    p = P(d_u, {3: v, 2: w.scale(3)})
    assert p.coefficient_at(2) == w.scale(3)
    assert p.coefficient_at(-4).is_zero()
    r = shifted_conjugate(7, u + v, d_u)
    assert ore_pow(r, 2).coefficient_at(6) == w


def test_unit_for_x(d_u, huvw):
    x = OrePoly.x(d_u)
    assert x.scalar_at(1) == 1
    assert str(x) == "x^1"
    assert ore_mul(x, OrePoly.x(d_u, -1)) == OrePoly.x(d_u, 0)
    assert not P(d_u, {2: huvw[0]}).has_scalar_part()


def test_scalars_and_negation(d_u, huvw):
    v = huvw[1]
    p = P(d_u, {1: v})
    assert p.scale(Fraction(1, 2)) + p.scale(Fraction(1, 2)) == p
    assert (p - p).is_zero()
    assert str(-p) == "-v*x^1"


def test_negative_powers_need_nilpotent_derivation():
    F = free_nilpotent_algebra(1, 2)
    euler = extend_from_generators(F, [F.generator(0)])
    OrePoly(euler, {3: F.generator(0)})
    with pytest.raises(NotLocallyNilpotent):
        OrePoly(euler, {-1: F.generator(0)})


def test_exponent_guard(d_u, huvw):
    with pytest.raises(ExponentOverflow):
        OrePoly(d_u, {2 ** 31: huvw[0]})


def test_weyl_embedding(H, d_u, huvw):
    u, v, w = huvw
    Y, X = weyl_y(H), embed_weyl_x(H)
    assert str(embed_weyl(v, d_u)) == "w*Y^1*X^0 + v*Y^0*X^0"
    assert embed_weyl(u + v, d_u) == embed_weyl(u, d_u) + embed_weyl(v, d_u)
    assert embed_weyl(u, d_u) == embed_weyl(u, zero_derivation(H))
    assert bi_ore_mul(X, Y) == bi_ore_mul(Y, X) + BiOrePoly(H, {(0, 0): 1})
    e = embed_weyl(v, d_u)
    assert bi_ore_mul(e, e).is_zero()
    assert bi_ore_mul(e, embed_weyl(H.zero(), d_u)).is_zero()
