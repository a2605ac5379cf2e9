"""Polynomials in one variable with coefficients in an algebra, recovered from values.

The Vandermonde system has rational entries, so an R-valued interpolation is
``dim`` ordinary rational solves sharing one matrix.
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Mapping, Sequence, Tuple

from .algebra import Algebra, AlgebraElement
from .rational import Rational, to_rational
from .errors import DuplicatePoint, InconsistentSamples, ParentMismatch, PreconditionViolated
from .linalg import solve_square

Sample = Tuple[Rational, AlgebraElement]


class RValuedPolynomial:
    """``a_0 + a_1 y + ... + a_m y^m`` with ``a_i`` in an algebra; trailing zeros trimmed."""

    __slots__ = ("parent", "coefficients")

    def __init__(self, parent: Algebra, coefficients: Sequence[AlgebraElement]):
        coeffs = list(coefficients)
        for c in coeffs:
            if c.parent is not parent and c.parent != parent:
                raise ParentMismatch("coefficient from another algebra")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.parent = parent
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def constant_term(self) -> AlgebraElement:
        return self.coefficients[0] if self.coefficients else self.parent.zero()

    def __eq__(self, other):
        if not isinstance(other, RValuedPolynomial):
            return NotImplemented
        return self.parent == other.parent and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        if not self.coefficients:
            return "RValuedPolynomial(0)"
        parts = [f"({c})*y^{i}" for i, c in enumerate(self.coefficients) if not c.is_zero()]
        return f"RValuedPolynomial({' + '.join(parts)})"


def evaluate(f: RValuedPolynomial, lam) -> AlgebraElement:
    lam = to_rational(lam)
    out = f.parent.zero()
    for c in reversed(f.coefficients):
        out = out.scale(lam) + c
    return out


def interpolate(samples: Sequence[Sample], degree_bound: int) -> RValuedPolynomial:
    """Unique polynomial of degree <= ``degree_bound`` through the first ``degree_bound + 1`` samples.

    Any further samples must lie on it, otherwise :class:`InconsistentSamples`.
    """
    points = [lam for lam, _ in samples]
    return interpolate_batch(points, {None: [val for _, val in samples]}, degree_bound)[None]


def interpolate_batch(points: Sequence, values: Mapping[Hashable, Sequence[AlgebraElement]],
                      degree_bound: int) -> Dict[Hashable, RValuedPolynomial]:
    """:func:`interpolate` for many value series over the same points, sharing one elimination."""
    points = [to_rational(lam) for lam in points]
    if len(points) < degree_bound + 1:
        raise PreconditionViolated(
            f"{len(points)} samples cannot pin down a polynomial of degree <= {degree_bound}"
        )
    if len(set(points)) != len(points):
        dup = next(p for p in points if points.count(p) > 1)
        raise DuplicatePoint(f"sample point {dup} appears twice")
    keys = list(values)
    series = [list(values[key]) for key in keys]
    if any(len(vals) != len(points) for vals in series):
        raise PreconditionViolated("every value series needs one value per point")
    parent = series[0][0].parent
    for vals in series:
        for val in vals:
            if val.parent is not parent and val.parent != parent:
                raise ParentMismatch("samples from different algebras")
    dim = parent.dim
    size = degree_bound + 1
    vandermonde = [[lam ** p for p in range(size)] for lam in points[:size]]
    rhs = [[c for vals in series for c in vals[row].coords] for row in range(size)]
    solution = solve_square(vandermonde, rhs)
    out = {}
    for s_idx, key in enumerate(keys):
        coeffs = [AlgebraElement._make(parent, tuple(row[s_idx * dim:(s_idx + 1) * dim])) for row in solution]
        f = RValuedPolynomial(parent, coeffs)
        for lam, val in zip(points[size:], series[s_idx][size:]):
            got = evaluate(f, lam)
            if got != val:
                raise InconsistentSamples(
                    f"interpolant of degree <= {degree_bound} gives {got} at {lam}, sample says {val}"
                )
        out[key] = f
    return out


def is_identically_zero(samples: Sequence[Sample], degree_bound: int) -> bool:
    return interpolate(samples, degree_bound).is_zero()


def sample(f: RValuedPolynomial, points: Sequence) -> List[Sample]:
    return [(to_rational(p), evaluate(f, p)) for p in points]
