"""Differential polynomial rings R[x; d] and their Laurent extension.

Elements are kept in left-coefficient normal form ``sum_e c_e x^e``.  The
only relation is ``x a = a x + d(a)``, which gives the closed form

    x^e a = sum_i binomial(e, i) d^i(a) x^(e - i)

for every integer ``e``.  For negative ``e`` the sum is infinite unless ``d``
is nilpotent, so negative exponents are only admitted for derivations whose
matrix is certified nilpotent.

The coefficient algebra R need not have a unit, yet ``x`` itself must be
expressible (``x * v``, conjugation by ``x^n``).  Coefficients are therefore
taken in ``Q + R``: a :class:`Coeff` is a rational scalar plus an element of R,
with ``d`` acting as zero on scalars.  Polynomials built from R-valued data
never acquire a scalar part.

:class:`BiOrePoly` is the first Weyl algebra ``R[Y][X; d/dY]`` used as the
target of the embedding ``r -> sum_i d^i(r)/i! Y^i``, ``x -> X``.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .algebra import Algebra, AlgebraElement
from .derivation import Derivation, local_nilpotency_index
from .errors import (
    ExponentOverflow,
    LemmaViolation,
    NotLocallyNilpotent,
    NTooSmall,
    ParentMismatch,
)
from .rational import ONE as _ONE, ZERO as _ZERO, Rational, binomial, is_scalar, to_rational

MINUS_INFINITY = float("-inf")
PLUS_INFINITY = float("inf")
EXPONENT_LIMIT = 2 ** 30


class Coeff:
    """Element ``scalar * 1 + elem`` of the unitalization ``Q + R``."""

    __slots__ = ("scalar", "elem")

    def __init__(self, scalar: Rational, elem: AlgebraElement):
        self.scalar = scalar
        self.elem = elem

    @classmethod
    def of(cls, value, algebra: Algebra) -> "Coeff":
        if isinstance(value, Coeff):
            return value
        if isinstance(value, AlgebraElement):
            return cls(_ZERO, value)
        return cls(to_rational(value), algebra.zero())

    def is_zero(self) -> bool:
        return not self.scalar and self.elem.is_zero()

    def __add__(self, other: "Coeff") -> "Coeff":
        return Coeff(self.scalar + other.scalar, self.elem + other.elem)

    def __sub__(self, other: "Coeff") -> "Coeff":
        return Coeff(self.scalar - other.scalar, self.elem - other.elem)

    def __neg__(self) -> "Coeff":
        return Coeff(-self.scalar, -self.elem)

    def scale(self, q: Rational) -> "Coeff":
        return Coeff(q * self.scalar, self.elem.scale(q))

    def __mul__(self, other: "Coeff") -> "Coeff":
        s, t = self.scalar, other.scalar
        elem = self.elem * other.elem
        if t:
            elem = elem + self.elem.scale(t)
        if s:
            elem = elem + other.elem.scale(s)
        return Coeff(s * t, elem)

    def derive(self, d: Derivation) -> "Coeff":
        return Coeff(_ZERO, d(self.elem))

    def __eq__(self, other):
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.scalar == other.scalar and self.elem == other.elem

    def __hash__(self):
        return hash((self.scalar, self.elem))

    def parts(self) -> List[Tuple[Rational, Optional[str]]]:
        out: List[Tuple[Rational, Optional[str]]] = []
        if self.scalar:
            out.append((self.scalar, None))
        out.extend(self.elem.terms())
        return out

    def __repr__(self):
        parts = [str(self.scalar)] if self.scalar else []
        if not self.elem.is_zero() or not parts:
            parts.append(str(self.elem))
        return " + ".join(parts)


def _check_exponent(e: int) -> int:
    if abs(e) > EXPONENT_LIMIT:
        raise ExponentOverflow(f"exponent {e} exceeds the guard 2**30")
    return e


def _derivative_chain(c: Coeff, d: Derivation, limit: Optional[int]) -> List[Coeff]:
    """``[c, d(c), d^2(c), ...]`` stopping at the first zero or after ``limit`` derivatives."""
    chain = [c]
    elem = c.elem
    while limit is None or len(chain) <= limit:
        elem = d(elem)
        if elem.is_zero():
            break
        chain.append(Coeff(_ZERO, elem))
    return chain


class OrePoly:
    """Laurent skew polynomial ``sum_e c_e x^e`` with left coefficients in ``Q + R``.

    Arithmetic follows ``x a = a x + d(a)``.  Instances are immutable; the
    ``terms`` mapping never stores a zero coefficient.
    """

    __slots__ = ("derivation", "terms")

    def __init__(self, derivation: Derivation, terms: Union[Mapping[int, object], Iterable[Tuple[int, object]]] = ()):
        self.derivation = derivation
        algebra = derivation.parent
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, Coeff] = {}
        for e, c in items:
            c = Coeff.of(c, algebra)
            if e in acc:
                acc[e] = acc[e] + c
            else:
                acc[e] = c
        self.terms = {}
        for e in sorted(acc, reverse=True):
            c = acc[e]
            if not c.is_zero():
                _check_exponent(e)
                if e < 0 and not derivation.is_nilpotent:
                    raise NotLocallyNilpotent(
                        "negative powers of x need a derivation whose matrix is nilpotent"
                    )
                self.terms[e] = c

    @classmethod
    def _from_normal(cls, derivation: Derivation, terms: Dict[int, Coeff]) -> "OrePoly":
        obj = object.__new__(cls)
        obj.derivation = derivation
        obj.terms = {e: terms[e] for e in sorted(terms, reverse=True) if not terms[e].is_zero()}
        return obj

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, derivation: Derivation) -> "OrePoly":
        return cls(derivation)

    @classmethod
    def constant(cls, derivation: Derivation, a) -> "OrePoly":
        return cls(derivation, {0: a})

    @classmethod
    def monomial(cls, derivation: Derivation, c, e: int) -> "OrePoly":
        return cls(derivation, {e: c})

    @classmethod
    def x(cls, derivation: Derivation, e: int = 1) -> "OrePoly":
        """The bare power ``x^e`` (scalar coefficient 1)."""
        return cls(derivation, {e: _ONE})

    # inspection -----------------------------------------------------------

    @property
    def algebra(self) -> Algebra:
        return self.derivation.parent

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max(self.terms) if self.terms else MINUS_INFINITY

    def low_degree(self):
        return min(self.terms) if self.terms else PLUS_INFINITY

    def support(self) -> List[int]:
        return sorted(self.terms)

    def coefficient_at(self, e: int) -> AlgebraElement:
        c = self.terms.get(e)
        return c.elem if c is not None else self.algebra.zero()

    def scalar_at(self, e: int) -> Rational:
        c = self.terms.get(e)
        return c.scalar if c is not None else _ZERO

    def has_scalar_part(self) -> bool:
        return any(c.scalar for c in self.terms.values())

    def coefficients(self) -> Dict[int, AlgebraElement]:
        return {e: c.elem for e, c in self.terms.items()}

    # arithmetic -------------------------------------------------------------

    def _compatible(self, other: "OrePoly") -> None:
        if other.derivation is not self.derivation and other.derivation != self.derivation:
            raise ParentMismatch("polynomials over different algebras or derivations")

    def __add__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        self._compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return OrePoly._from_normal(self.derivation, out)

    def __neg__(self):
        return OrePoly._from_normal(self.derivation, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self + (-other)

    def scale(self, q) -> "OrePoly":
        q = to_rational(q)
        return OrePoly._from_normal(self.derivation, {e: c.scale(q) for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, OrePoly):
            return ore_mul(self, other)
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, m: int):
        return ore_pow(self, m)

    def shift(self, j: int) -> "OrePoly":
        """Right multiplication by ``x^j``: exponents move, coefficients stay on the left."""
        return OrePoly(self.derivation, {e + j: c for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.terms == other.terms and (
            self.derivation is other.derivation or self.derivation == other.derivation
        )

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __str__(self):
        return format_terms(
            (e, c, label) for e, coeff in self.terms.items() for c, label in coeff.parts()
        )

    def __repr__(self):
        return f"OrePoly({self})"


def format_terms(items) -> str:
    """Render ``(exponent, coefficient, label-or-None)`` triples as ``c*label*x^e`` sums."""
    out = ""
    for e, c, label in items:
        neg = c < 0
        mag = -c if neg else c
        factors = []
        if mag != 1:
            factors.append(str(mag))
        if label is not None:
            factors.append(label)
        factors.append(f"x^{e}")
        body = "*".join(factors)
        if not out:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out or "0"


def ore_mul(p: OrePoly, q: OrePoly) -> OrePoly:
    """Product in R[x, x^-1; d], reduced to left-coefficient normal form."""
    p._compatible(q)
    d = p.derivation
    if not p.terms or not q.terms:
        return OrePoly._from_normal(d, {})
    low = min(p.terms)
    if low < 0:
        if not d.is_nilpotent:
            raise NotLocallyNilpotent("negative powers of x need a nilpotent derivation")
        limit = None
    else:
        limit = max(p.terms)
    chains = [(f, _derivative_chain(c, d, limit)) for f, c in q.terms.items()]
    out: Dict[int, Coeff] = {}
    for e, c in p.terms.items():
        for f, chain in chains:
            for i, dc in enumerate(chain):
                if 0 <= e < i:
                    break
                term = c * dc
                b = binomial(e, i)
                if b != 1:
                    term = term.scale(b)
                key = e + f - i
                if key in out:
                    out[key] = out[key] + term
                else:
                    out[key] = term
    for key in out:
        _check_exponent(key)
    return OrePoly._from_normal(d, out)


def ore_pow(p: OrePoly, m: int) -> OrePoly:
    if m < 1:
        raise ValueError("ore_pow needs m >= 1")
    out = p
    for _ in range(m - 1):
        out = ore_mul(out, p)
    return out


def x_times(p: OrePoly) -> OrePoly:
    """Left multiplication by ``x`` using only ``x c = c x + d(c)``."""
    d = p.derivation
    out: Dict[int, Coeff] = {}
    for e, c in p.terms.items():
        for key, val in ((e + 1, c), (e, c.derive(d))):
            out[key] = out[key] + val if key in out else val
    return OrePoly._from_normal(d, out)


def commute_power(n: int, a: AlgebraElement, d: Derivation) -> OrePoly:
    """Normal form of ``x^n a``: ``sum_{i=0}^{n} binomial(n, i) d^i(a) x^(n-i)``."""
    if a.parent is not d.parent and a.parent != d.parent:
        raise ParentMismatch("element and derivation live on different algebras")
    if n < 0:
        raise ValueError("commute_power needs n >= 0")
    terms = {}
    r = a
    for i in range(n + 1):
        if r.is_zero():
            break
        terms[n - i] = r.scale(binomial(n, i))
        r = d(r)
    return OrePoly(d, terms)


def commute_negative(a: AlgebraElement, d: Derivation, k: int) -> OrePoly:
    """Normal form of ``x^-1 a``: ``sum_{i=0}^{k} (-1)^i d^i(a) x^(-1-i)``.

    Requires ``d^(k+1)(a) = 0``.  The result is checked against ``x * result == a``.
    """
    if a.parent is not d.parent and a.parent != d.parent:
        raise ParentMismatch("element and derivation live on different algebras")
    terms = {}
    r = a
    for i in range(k + 1):
        terms[-1 - i] = r if i % 2 == 0 else -r
        r = d(r)
    if not r.is_zero():
        raise NotLocallyNilpotent(f"d^{k + 1}(a) is not zero")
    result = OrePoly(d, terms)
    if x_times(result) != OrePoly.constant(d, a):
        raise LemmaViolation("x * (x^-1 a) != a")
    return result


def conjugate(p: OrePoly, i: int) -> OrePoly:
    """``x^i p x^-i`` computed by genuine multiplication in the Laurent ring."""
    d = p.derivation
    return ore_mul(ore_mul(OrePoly.x(d, i), p), OrePoly.x(d, -i))


def _local_index(d: Derivation, a: AlgebraElement) -> int:
    k = local_nilpotency_index(d, a, d.parent.dim + 1)
    if k is None:
        raise NotLocallyNilpotent(f"d is not locally nilpotent on {a}")
    return k


def conjugate_by_power(n: int, a: AlgebraElement, d: Derivation) -> OrePoly:
    """``x^n a x^-n = sum_{i=0}^{k} binomial(n, i) d^i(a) x^-i`` for ``n > k``.

    ``k`` is the least index with ``d^(k+1)(a) = 0``.
    """
    if a.parent is not d.parent and a.parent != d.parent:
        raise ParentMismatch("element and derivation live on different algebras")
    k = _local_index(d, a)
    if n <= k:
        raise NTooSmall(f"n = {n} must exceed the local nilpotency index k = {k}")
    terms = {}
    r = a
    for i in range(k + 1):
        terms[-i] = r.scale(binomial(n, i))
        r = d(r)
    return OrePoly(d, terms)


def shifted_conjugate(n: int, a: AlgebraElement, d: Derivation) -> OrePoly:
    """``x^n a x^-n x^(k+2)``, an honest element of R[x; d] with exponents in [2, k+2]."""
    k = _local_index(d, a)
    return conjugate_by_power(n, a, d).shift(k + 2)


def degree(p: OrePoly):
    return p.degree()


def low_degree(p: OrePoly):
    return p.low_degree()


def coefficient_at(p: OrePoly, e: int) -> AlgebraElement:
    return p.coefficient_at(e)


# first Weyl algebra --------------------------------------------------------


class BiOrePoly:
    """Element ``sum c_(j,i) Y^j X^i`` of ``R[Y][X; d/dY]`` with coefficients in ``Q + R``.

    Coefficients commute with both ``X`` and ``Y``; the only relation is
    ``X Y = Y X + 1``.
    """

    __slots__ = ("parent", "terms")

    def __init__(self, parent: Algebra, terms: Union[Mapping[Tuple[int, int], object], Iterable] = ()):
        self.parent = parent
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Tuple[int, int], Coeff] = {}
        for key, c in items:
            j, i = key
            if j < 0 or i < 0:
                raise ValueError("Weyl algebra exponents are non-negative")
            c = Coeff.of(c, parent)
            acc[key] = acc[key] + c if key in acc else c
        self.terms = {key: acc[key] for key in sorted(acc, reverse=True) if not acc[key].is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def _compatible(self, other: "BiOrePoly") -> None:
        if other.parent is not self.parent and other.parent != self.parent:
            raise ParentMismatch("Weyl algebra elements over different algebras")

    def __add__(self, other):
        if not isinstance(other, BiOrePoly):
            return NotImplemented
        self._compatible(other)
        return BiOrePoly(self.parent, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return BiOrePoly(self.parent, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiOrePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiOrePoly):
            return bi_ore_mul(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BiOrePoly):
            return NotImplemented
        return self.terms == other.terms and (self.parent is other.parent or self.parent == other.parent)

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __str__(self):
        parts = []
        for (j, i), coeff in self.terms.items():
            for c, label in coeff.parts():
                factors = [] if c == 1 else [str(c)]
                if label is not None:
                    factors.append(label)
                factors.append(f"Y^{j}*X^{i}")
                parts.append("*".join(factors))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"BiOrePoly({self})"


def _falling(n: int, t: int) -> int:
    out = 1
    for s in range(t):
        out *= n - s
    return out


def bi_ore_mul(p: BiOrePoly, q: BiOrePoly) -> BiOrePoly:
    """Product under ``X Y = Y X + 1``.

    ``X^i Y^j' = sum_t binomial(i, t) j'!/(j'-t)! Y^(j'-t) X^(i-t)`` (Leibniz
    for ``d/dY``); coefficients pass freely through ``X`` and ``Y``.
    """
    p._compatible(q)
    out: Dict[Tuple[int, int], Coeff] = {}
    for (j, i), c in p.terms.items():
        for (j2, i2), c2 in q.terms.items():
            cc = c * c2
            if cc.is_zero():
                continue
            for t in range(min(i, j2) + 1):
                factor = binomial(i, t) * _falling(j2, t)
                key = (j + j2 - t, i + i2 - t)
                term = cc.scale(factor)
                out[key] = out[key] + term if key in out else term
    return BiOrePoly(p.parent, out)


def embed_weyl(r: AlgebraElement, d: Derivation) -> BiOrePoly:
    """``r -> sum_i d^i(r)/i! Y^i`` (finite because d is locally nilpotent on r)."""
    if r.parent is not d.parent and r.parent != d.parent:
        raise ParentMismatch("element and derivation live on different algebras")
    k = _local_index(d, r)
    terms = {}
    s = r
    for i in range(k + 1):
        terms[(i, 0)] = s.scale(Rational(1, math.factorial(i)))
        s = d(s)
    return BiOrePoly(d.parent, terms)


def embed_weyl_x(algebra: Algebra) -> BiOrePoly:
    """Image ``X`` of the indeterminate ``x``."""
    return BiOrePoly(algebra, {(0, 1): _ONE})


def weyl_y(algebra: Algebra) -> BiOrePoly:
    return BiOrePoly(algebra, {(1, 0): _ONE})


def embed_ore_poly(p: OrePoly) -> BiOrePoly:
    """Extend the embedding to polynomials: ``sum c_e x^e -> sum embed(c_e) X^e``."""
    if p.terms and min(p.terms) < 0:
        raise ValueError("only elements of R[x; d] (non-negative exponents) embed into A1(R)")
    d = p.derivation
    out = BiOrePoly(d.parent)
    for e, c in p.terms.items():
        img = embed_weyl(c.elem, d)
        if c.scalar:
            img = img + BiOrePoly(d.parent, {(0, 0): c.scalar})
        out = out + BiOrePoly(d.parent, {(j, i + e): v for (j, i), v in img.terms.items()})
    return out
