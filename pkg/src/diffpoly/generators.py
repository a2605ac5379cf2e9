"""Test instances: the Heisenberg algebra and seeded random free nilpotent instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional

from .algebra import Algebra, AlgebraElement, FreeNilpotentAlgebra, free_nilpotent_algebra, heisenberg_algebra
from .derivation import Derivation, derivation_from_images, extend_from_generators, inner_derivation
from .ore import OrePoly
from .rational import Rational

_COEFFS = [Rational(c) for c in (-2, -1, 1, 1, 2, 3)] + [Rational(1, 2), Rational(-1, 3)]


@dataclass(frozen=True)
class Instance:
    algebra: Algebra
    derivation: Derivation
    a: AlgebraElement
    description: str


def heisenberg_instance() -> Instance:
    H = heisenberg_algebra()
    u, v, _ = H.basis()
    return Instance(H, inner_derivation(u), u + v, "heisenberg, d = inner(u), a = u+v")


def random_element(algebra: Algebra, rng: random.Random, density: float = 0.5,
                   support: Optional[List[int]] = None) -> AlgebraElement:
    idx = range(algebra.dim) if support is None else support
    coords = [Rational(0)] * algebra.dim
    for i in idx:
        if rng.random() < density:
            coords[i] = rng.choice(_COEFFS)
    return AlgebraElement._make(algebra, tuple(coords))


def random_nilpotent_derivation(algebra: FreeNilpotentAlgebra, rng: random.Random) -> Derivation:
    """Generator images with a strictly triangular linear part plus longer words, plus a random inner part.

    Either piece alone is nilpotent and their sum is block triangular with
    respect to word length with nilpotent diagonal blocks, so the result is
    always locally nilpotent.
    """
    g = algebra.generators
    long_words = [n for n, w in enumerate(algebra.words) if len(w) >= 2]
    images = []
    for c in range(g):
        img = random_element(algebra, rng, 0.3, long_words)
        for c2 in range(c + 1, g):
            if rng.random() < 0.5:
                img = img + algebra.generator(c2).scale(rng.choice(_COEFFS))
        images.append(img)
    d = extend_from_generators(algebra, images)
    if rng.random() < 0.6:
        inner = inner_derivation(random_element(algebra, rng, 0.5))
        d = derivation_from_images(algebra, [x + y for x, y in zip(d.images, inner.images)])
    assert d.is_nilpotent
    return d


def random_free_nilpotent_instance(rng: random.Random, max_generators: int = 2, max_class: int = 3) -> Instance:
    g = rng.randint(1, max_generators)
    nclass = rng.randint(2, max_class)
    F = free_nilpotent_algebra(g, nclass)
    d = random_nilpotent_derivation(F, rng)
    a = random_element(F, rng, 0.6)
    if a.is_zero():
        a = F.generator(rng.randrange(g))
    return Instance(F, d, a, f"free nilpotent g={g} class={nclass}, random derivation, a = {a}")


def random_instances(count: int, seed: int = 0, **kwargs) -> List[Instance]:
    rng = random.Random(seed)
    return [random_free_nilpotent_instance(rng, **kwargs) for _ in range(count)]


def random_ore_poly(d: Derivation, rng: random.Random, low: int = -3, high: int = 3,
                    terms: int = 3) -> OrePoly:
    """Random polynomial with R-valued coefficients and exponents in ``[low, high]``."""
    out = {}
    for _ in range(terms):
        e = rng.randint(low, high)
        out[e] = random_element(d.parent, rng, 0.5)
    return OrePoly(d, out)
