"""Derivations of finite-dimensional algebras.

A derivation is stored as a square rational matrix whose column ``j`` holds
the coordinates of ``d(e_j)``.  Leibniz's rule is checked on all basis pairs
when the derivation is built.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .algebra import Algebra, AlgebraElement, FreeNilpotentAlgebra
from .rational import ZERO as _ZERO, to_rational
from .errors import DimensionMismatch, LeibnizViolation, ParentMismatch
from .linalg import mat_mul


class Derivation:
    """Q-linear map ``d`` on an algebra with ``d(xy) = d(x) y + x d(y)``."""

    __slots__ = ("parent", "matrix", "images", "nil_index")

    def __init__(self, parent: Algebra, matrix: Sequence[Sequence], *, validate: bool = True):
        dim = parent.dim
        if len(matrix) != dim or any(len(row) != dim for row in matrix):
            raise DimensionMismatch(f"derivation matrix must be {dim}x{dim}")
        self.parent = parent
        self.matrix = tuple(tuple(to_rational(c) for c in row) for row in matrix)
        self.images = tuple(
            AlgebraElement._make(parent, tuple(self.matrix[l][j] for l in range(dim))) for j in range(dim)
        )
        if validate:
            self._check_leibniz()
        self.nil_index = _matrix_nil_index(self.matrix)

    def _check_leibniz(self) -> None:
        basis = self.parent.basis()
        for i, ei in enumerate(basis):
            for j, ej in enumerate(basis):
                lhs = self(ei * ej)
                rhs = self.images[i] * ej + ei * self.images[j]
                if lhs != rhs:
                    labels = self.parent.labels
                    raise LeibnizViolation((labels[i], labels[j]), lhs, rhs)

    @property
    def is_nilpotent(self) -> bool:
        """True when some power of the matrix vanishes (local nilpotency in finite dimension)."""
        return self.nil_index is not None

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        if x.parent is not self.parent and x.parent != self.parent:
            raise ParentMismatch("derivation applied to an element of another algebra")
        dim = self.parent.dim
        out = [_ZERO] * dim
        for j, c in enumerate(x.coords):
            if c:
                for l, v in enumerate(self.images[j].coords):
                    if v:
                        out[l] += c * v
        return AlgebraElement._make(self.parent, tuple(out))

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.parent == other.parent and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        maps = ", ".join(f"{lab}->{img}" for lab, img in zip(self.parent.labels, self.images))
        return f"Derivation({maps})"

    def __getstate__(self):
        return {"parent": self.parent, "matrix": self.matrix}

    def __setstate__(self, state):
        Derivation.__init__(self, state["parent"], state["matrix"], validate=False)


def _matrix_nil_index(matrix) -> Optional[int]:
    """Least ``p >= 1`` with ``matrix**p == 0``, or None if the matrix is not nilpotent."""
    dim = len(matrix)
    power = [list(row) for row in matrix]
    for p in range(1, dim + 1):
        if not any(any(row) for row in power):
            return p
        power = mat_mul(power, matrix)
    return None


def make_derivation(parent: Algebra, matrix: Sequence[Sequence]) -> Derivation:
    return Derivation(parent, matrix)


def derivation_from_images(parent: Algebra, images: Sequence[AlgebraElement]) -> Derivation:
    """Derivation with ``d(e_j) = images[j]``; Leibniz is still validated."""
    dim = parent.dim
    if len(images) != dim:
        raise DimensionMismatch(f"need {dim} images, got {len(images)}")
    matrix = [[images[j].coords[l] for j in range(dim)] for l in range(dim)]
    return Derivation(parent, matrix)


def inner_derivation(m: AlgebraElement) -> Derivation:
    """The derivation ``r -> m*r - r*m``."""
    parent = m.parent
    images = [m * e - e * m for e in parent.basis()]
    return derivation_from_images(parent, images)


def extend_from_generators(algebra: FreeNilpotentAlgebra, generator_images: Sequence[AlgebraElement]) -> Derivation:
    """Unique derivation of a free nilpotent algebra with prescribed generator images.

    Every assignment extends, since the ideal of over-long words is mapped into
    itself.  ``d(c_1...c_s) = sum_p c_1..c_{p-1} d(c_p) c_{p+1}..c_s``.
    """
    if len(generator_images) != algebra.generators:
        raise DimensionMismatch(f"need {algebra.generators} generator images")
    gens = [algebra.generator(c) for c in range(algebra.generators)]
    images: List[AlgebraElement] = []
    for word in algebra.words:
        total = algebra.zero()
        for p, letter in enumerate(word):
            term = generator_images[letter]
            for c in reversed(word[:p]):
                term = gens[c] * term
            for c in word[p + 1:]:
                term = term * gens[c]
            total = total + term
        images.append(total)
    return derivation_from_images(algebra, images)


def zero_derivation(parent: Algebra) -> Derivation:
    return Derivation(parent, [[0] * parent.dim for _ in range(parent.dim)])


def apply_power(d: Derivation, r: AlgebraElement, i: int) -> AlgebraElement:
    """``d^i(r)``, with ``d^0(r) = r``."""
    if r.parent is not d.parent and r.parent != d.parent:
        raise ParentMismatch("derivation applied to an element of another algebra")
    if i < 0:
        raise ValueError("derivation powers are non-negative")
    for _ in range(i):
        if r.is_zero():
            break
        r = d(r)
    return r


def derivative_chain(d: Derivation, r: AlgebraElement, limit: Optional[int] = None) -> List[AlgebraElement]:
    """``[r, d(r), d^2(r), ...]`` up to the last nonzero term (at most ``limit + 1`` terms)."""
    chain = []
    while not r.is_zero() and (limit is None or len(chain) <= limit):
        chain.append(r)
        r = d(r)
    return chain


def local_nilpotency_index(d: Derivation, a: AlgebraElement, bound: int) -> Optional[int]:
    """Least ``k >= 0`` with ``d^(k+1)(a) = 0`` when ``k < bound``; None otherwise.

    ``k = 0`` covers ``d(a) = 0``, including ``a = 0``.
    """
    if a.parent is not d.parent and a.parent != d.parent:
        raise ParentMismatch("derivation applied to an element of another algebra")
    r = d(a)
    for k in range(bound):
        if r.is_zero():
            return k
        r = d(r)
    return None


def is_locally_nilpotent(d: Derivation, bound: int) -> bool:
    """Every basis element is killed by ``d^(k+1)`` with ``k < bound``.

    In finite dimension this coincides with nilpotency of the matrix; both are
    computed and must agree.
    """
    per_element = all(local_nilpotency_index(d, e, bound) is not None for e in d.parent.basis())
    if bound >= d.parent.dim:
        assert per_element == d.is_nilpotent
    return per_element
