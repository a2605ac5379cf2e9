"""Finite-dimensional algebras over Q given by structure constants.

An :class:`Algebra` is a Q-vector space with basis ``e_0 .. e_{dim-1}`` and a
bilinear associative product ``e_i * e_j = sum_l c[i][j][l] e_l``.  Algebras
are not assumed unital or commutative.  All scalars are
:class:`~diffpoly.rational.Rational`, so every equality in this package is exact.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    AssociativityViolation,
    DimensionMismatch,
    ParentMismatch,
    SizeExceeded,
)
from .linalg import reduce_against, rref
from .rational import ONE, ZERO as _ZERO, Rational, is_scalar, to_rational

DEFAULT_SIZE_CAP = 512


class Algebra:
    """Finite-dimensional associative Q-algebra given by structure constants.

    ``products`` maps a basis pair ``(i, j)`` to the coordinate vector of
    ``e_i * e_j``; absent pairs multiply to zero.  Associativity is checked on
    every basis triple at construction.
    """

    def __init__(self, labels: Sequence[str], products: Mapping[Tuple[int, int], Sequence], *, validate: bool = True):
        labels = tuple(str(s) for s in labels)
        dim = len(labels)
        if dim < 1:
            raise DimensionMismatch("an algebra needs at least one basis element")
        if len(set(labels)) != dim:
            raise DimensionMismatch(f"basis labels are not distinct: {labels}")
        table: Dict[Tuple[int, int], Tuple[Tuple[int, Rational], ...]] = {}
        for (i, j), coords in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"product index ({i}, {j}) outside basis of size {dim}")
            if len(coords) != dim:
                raise DimensionMismatch(
                    f"product e{i}*e{j} has {len(coords)} coordinates, expected {dim}"
                )
            sparse = tuple((l, to_rational(c)) for l, c in enumerate(coords) if to_rational(c) != 0)
            if sparse:
                table[(i, j)] = sparse
        self.dim = dim
        self.labels = labels
        self._table = table
        rows: List[Dict[int, Tuple[Tuple[int, Rational], ...]]] = [dict() for _ in range(dim)]
        for (i, j), prod in table.items():
            rows[i][j] = prod
        self._rows = rows
        self._index = {s: n for n, s in enumerate(labels)}
        if validate:
            self._check_associativity()

    # construction helpers -------------------------------------------------

    def _triple_products(self, outer_left: bool) -> Dict[Tuple[int, int, int], Dict[int, Rational]]:
        out = {}
        table = self._table
        for (p, q), prod in table.items():
            for r in range(self.dim):
                acc: Dict[int, Rational] = {}
                for l, c in prod:
                    key = (l, r) if outer_left else (r, l)
                    for l2, c2 in table.get(key, ()):
                        acc[l2] = acc.get(l2, _ZERO) + c * c2
                acc = {l: c for l, c in acc.items() if c}
                if acc:
                    out[(p, q, r) if outer_left else (r, p, q)] = acc
        return out

    def _check_associativity(self) -> None:
        left = self._triple_products(outer_left=True)
        right = self._triple_products(outer_left=False)
        for triple in sorted(left.keys() | right.keys()):
            lhs = left.get(triple, {})
            rhs = right.get(triple, {})
            if lhs != rhs:
                names = tuple(self.labels[t] for t in triple)
                raise AssociativityViolation(
                    names, self._from_sparse(lhs), self._from_sparse(rhs)
                )

    def _from_sparse(self, sparse: Mapping[int, Rational]) -> "AlgebraElement":
        coords = [_ZERO] * self.dim
        for l, c in sparse.items():
            coords[l] = c
        return AlgebraElement._make(self, tuple(coords))

    # public API -------------------------------------------------------------

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis={list(self.labels)})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.labels == other.labels and self._table == other._table

    def __hash__(self):
        return hash(self.labels)

    def __getstate__(self):
        return {"labels": self.labels, "table": self._table}

    def __setstate__(self, state):
        products = {}
        dim = len(state["labels"])
        for key, sparse in state["table"].items():
            coords = [_ZERO] * dim
            for l, c in sparse:
                coords[l] = c
            products[key] = coords
        Algebra.__init__(self, state["labels"], products, validate=False)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}; basis is {list(self.labels)}") from None

    def basis(self) -> List["AlgebraElement"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def basis_element(self, i) -> "AlgebraElement":
        if isinstance(i, str):
            i = self.index(i)
        coords = [_ZERO] * self.dim
        coords[i] = ONE
        return AlgebraElement._make(self, tuple(coords))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement._make(self, (_ZERO,) * self.dim)

    def element(self, coords) -> "AlgebraElement":
        """Element from a coordinate sequence or a ``{label: coefficient}`` mapping."""
        if isinstance(coords, Mapping):
            vec = [_ZERO] * self.dim
            for label, c in coords.items():
                vec[self.index(label)] += to_rational(c)
            coords = vec
        return AlgebraElement(self, coords)

    def structure_constants(self) -> List[List[List[Rational]]]:
        """Dense ``dim x dim x dim`` table ``c[i][j][l]``."""
        dense = [[[_ZERO] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), prod in self._table.items():
            for l, c in prod:
                dense[i][j][l] = c
        return dense

    def nonzero_products(self) -> Dict[Tuple[int, int], Tuple[Tuple[int, Rational], ...]]:
        return dict(self._table)

    def multiply(self, x: Sequence[Rational], y: Sequence[Rational]) -> Tuple[Rational, ...]:
        out = [_ZERO] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        if not ys:
            return tuple(out)
        rows = self._rows
        for i, a in enumerate(x):
            if not a:
                continue
            row = rows[i]
            if not row:
                continue
            for j, b in ys:
                prod = row.get(j)
                if prod:
                    ab = a * b
                    for l, c in prod:
                        out[l] += ab * c
        return tuple(out)


class AlgebraElement:
    """Immutable coordinate vector over the basis of an :class:`Algebra`.

    ``*`` between two elements is the algebra product; ``*`` with an int or
    Rational is scalar multiplication.
    """

    __slots__ = ("parent", "coords")

    def __init__(self, parent: Algebra, coords: Sequence):
        if len(coords) != parent.dim:
            raise DimensionMismatch(f"expected {parent.dim} coordinates, got {len(coords)}")
        self.parent = parent
        self.coords = tuple(to_rational(c) for c in coords)

    @classmethod
    def _make(cls, parent: Algebra, coords: Tuple[Rational, ...]) -> "AlgebraElement":
        obj = object.__new__(cls)
        obj.parent = parent
        obj.coords = coords
        return obj

    def _same_parent(self, other: "AlgebraElement") -> None:
        if other.parent is not self.parent and other.parent != self.parent:
            raise ParentMismatch("elements belong to different algebras")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same_parent(other)
        return AlgebraElement._make(self.parent, tuple(a + b if b else a for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same_parent(other)
        return AlgebraElement._make(self.parent, tuple(a - b if b else a for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement._make(self.parent, tuple(-a if a else a for a in self.coords))

    def scale(self, q) -> "AlgebraElement":
        q = to_rational(q)
        if q == 1:
            return self
        return AlgebraElement._make(self.parent, tuple(q * a if a else a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul_elements(self, other)
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, m: int):
        return power(self, m)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coords == other.coords and (self.parent is other.parent or self.parent == other.parent)

    def __hash__(self):
        return hash(self.coords)

    def terms(self) -> List[Tuple[Rational, str]]:
        return [(c, self.parent.labels[i]) for i, c in enumerate(self.coords) if c]

    def __str__(self):
        parts = []
        for c, label in self.terms():
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{c}*{label}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"<{self}>"


def make_algebra(dim: int, structure_constants, labels: Sequence[str]) -> Algebra:
    """Validated algebra from a dense ``dim x dim`` table of coordinate vectors.

    ``structure_constants[i][j]`` is the coordinate vector of ``e_i * e_j``.
    """
    if dim < 1:
        raise DimensionMismatch("dim must be positive")
    if len(labels) != dim:
        raise DimensionMismatch(f"{len(labels)} labels for dimension {dim}")
    if len(structure_constants) != dim or any(len(row) != dim for row in structure_constants):
        raise DimensionMismatch(f"structure constant table must be {dim}x{dim}")
    products = {}
    for i, row in enumerate(structure_constants):
        for j, coords in enumerate(row):
            products[(i, j)] = coords
    return Algebra(labels, products)


def mul_elements(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._same_parent(y)
    return AlgebraElement._make(x.parent, x.parent.multiply(x.coords, y.coords))


def power(x: AlgebraElement, m: int) -> AlgebraElement:
    """Left-associated ``m``-fold product ``x*x*...*x``."""
    if m < 1:
        raise ValueError("power needs m >= 1 (the algebra has no unit)")
    out = x
    for _ in range(m - 1):
        out = mul_elements(out, x)
    return out


def element_nilpotency_index(x: AlgebraElement, bound: int) -> Optional[int]:
    """Least ``m <= bound`` with ``x**m == 0``, or None."""
    p = x
    for m in range(1, bound + 1):
        if p.is_zero():
            return m
        p = mul_elements(p, x)
    return None


def algebra_nilpotency_index(algebra: Algebra, bound: int) -> Optional[int]:
    """Least ``j <= bound`` with ``R^j = 0`` (products of ``j`` elements vanish), or None."""
    dim = algebra.dim
    current, _ = rref([e.coords for e in algebra.basis()], dim)
    gens = [e.coords for e in algebra.basis()]
    for j in range(1, bound + 1):
        if not current:
            return j
        prods = [algebra.multiply(b, g) for b in current for g in gens]
        nxt, _ = rref(prods, dim)
        if len(nxt) == len(current):
            return None
        current = nxt
    return None


class Subspace:
    """Q-subspace of an algebra held as a canonical reduced row-echelon basis."""

    __slots__ = ("parent", "basis_matrix", "pivots")

    def __init__(self, parent: Algebra, vectors: Iterable[Sequence[Rational]]):
        self.parent = parent
        basis, pivots = rref(list(vectors), parent.dim)
        self.basis_matrix = tuple(basis)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.basis_matrix)

    def elements(self) -> List[AlgebraElement]:
        return [AlgebraElement._make(self.parent, row) for row in self.basis_matrix]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.parent == other.parent and self.basis_matrix == other.basis_matrix

    def __hash__(self):
        return hash(self.basis_matrix)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis=[{', '.join(map(str, self.elements()))}])"

    def __contains__(self, x: AlgebraElement) -> bool:
        return subspace_contains(self, x)


def subspace_contains(s: Subspace, x: AlgebraElement) -> bool:
    if x.parent is not s.parent and x.parent != s.parent:
        raise ParentMismatch("element and subspace belong to different algebras")
    return not any(reduce_against(s.basis_matrix, s.pivots, x.coords))


def subalgebra_closure(generators: Sequence[AlgebraElement]) -> Subspace:
    """Smallest subspace containing ``generators`` and closed under products."""
    if not generators:
        raise ValueError("subalgebra_closure needs at least one generator")
    parent = generators[0].parent
    for g in generators[1:]:
        generators[0]._same_parent(g)
    span = Subspace(parent, [g.coords for g in generators])
    while True:
        rows = span.basis_matrix
        prods = [parent.multiply(p, q) for p in rows for q in rows]
        grown = Subspace(parent, list(rows) + prods)
        if grown.dim == span.dim:
            return span
        span = grown


class FreeNilpotentAlgebra(Algebra):
    """Free associative algebra on ``generators`` letters modulo words longer than ``nclass``.

    Basis element ``n`` is the word ``self.words[n]`` (a tuple of letter
    indices); the product of two words is their concatenation, or zero when it
    is longer than ``nclass``.
    """

    def __init__(self, generators: int, nclass: int, cap: int = DEFAULT_SIZE_CAP):
        if generators < 1 or nclass < 1:
            raise ValueError("generators and class must be positive")
        count = 0
        for length in range(1, nclass + 1):
            count += generators ** length
            if count > cap:
                raise SizeExceeded(
                    f"free nilpotent algebra on {generators} generators of class {nclass} "
                    f"has more than {cap} basis words"
                )
        words = [w for length in range(1, nclass + 1) for w in itertools.product(range(generators), repeat=length)]
        letters = _letters(generators)
        sep = "" if all(len(s) == 1 for s in letters) else "."
        labels = [sep.join(letters[c] for c in w) for w in words]
        where = {w: n for n, w in enumerate(words)}
        products = {}
        for i, u in enumerate(words):
            for j, v in enumerate(words):
                if len(u) + len(v) <= nclass:
                    coords = [0] * len(words)
                    coords[where[u + v]] = 1
                    products[(i, j)] = coords
        self.generators = generators
        self.nclass = nclass
        self.words = tuple(words)
        super().__init__(labels, products)

    def __setstate__(self, state):
        Algebra.__setstate__(self, state)
        self.generators = state["generators"]
        self.nclass = state["nclass"]
        self.words = state["words"]

    def __getstate__(self):
        state = Algebra.__getstate__(self)
        state.update(generators=self.generators, nclass=self.nclass, words=self.words)
        return state

    def generator(self, c: int) -> AlgebraElement:
        return self.basis_element(c)


def _letters(g: int) -> List[str]:
    if g == 1:
        return ["t"]
    # 'x' is reserved for the polynomial variable in expression syntax
    alphabet = "abcdefghijklmnopqrsuvwyz"
    if g <= len(alphabet):
        return list(alphabet[:g])
    return [f"g{c}" for c in range(g)]


def free_nilpotent_algebra(generators: int, nclass: int, cap: int = DEFAULT_SIZE_CAP) -> FreeNilpotentAlgebra:
    return FreeNilpotentAlgebra(generators, nclass, cap)


def heisenberg_algebra() -> Algebra:
    """Three-dimensional algebra span{u, v, w} with ``u*v = w`` and every other basis product 0."""
    return Algebra(["u", "v", "w"], {(0, 1): [0, 0, 1]})
