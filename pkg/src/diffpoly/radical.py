"""Quasi-inverses in R[x; d] and its Laurent extension.

``r'`` is a quasi-inverse of ``r`` when ``r - r' + r r' = 0 = r - r' + r' r``.
For nilpotent ``r`` (``r^m = 0``) it is the finite series ``r + r^2 + ... + r^(m-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .errors import LemmaViolation, NotNilpotentWithinBound, PreconditionViolated
from .ore import OrePoly, conjugate, ore_mul


@dataclass(frozen=True)
class QuasiInverseResult:
    element: OrePoly
    inverse: OrePoly
    nil_index: int

    def __post_init__(self):
        if not verify_quasi_inverse(self.element, self.inverse):
            raise LemmaViolation(f"{self.inverse} is not a quasi-inverse of {self.element}")


def nil_powers(r: OrePoly, bound: int) -> List[OrePoly]:
    """``[r, r^2, ..., r^(m-1)]`` where ``m <= bound`` is least with ``r^m = 0``."""
    powers: List[OrePoly] = []
    p = r
    for _ in range(bound):
        if p.is_zero():
            return powers
        powers.append(p)
        p = ore_mul(p, r)
    raise NotNilpotentWithinBound(f"no power r^m with m <= {bound} vanishes")


def quasi_inverse_nilpotent(r: OrePoly, bound: int) -> QuasiInverseResult:
    """Quasi-inverse of a nilpotent ``r`` as the sum of its nonzero powers."""
    powers = nil_powers(r, bound)
    total = OrePoly.zero(r.derivation)
    for p in powers:
        total = total + p
    return QuasiInverseResult(r, total, len(powers) + 1)


def quasi_inverse_horner(r: OrePoly, bound: int, *, side: str = "left") -> OrePoly:
    """Same series accumulated as ``h <- r + r h`` (or ``r + h r`` for ``side="right"``).

    Iterating ``m - 1`` times from ``h = 0`` reaches the fixed point once ``r^m = 0``.
    """
    nil_index = len(nil_powers(r, bound)) + 1
    h = OrePoly.zero(r.derivation)
    for _ in range(nil_index - 1):
        h = r + (ore_mul(r, h) if side == "left" else ore_mul(h, r))
    return h


def verify_quasi_inverse(r: OrePoly, r_prime: OrePoly) -> bool:
    r._compatible(r_prime)
    diff = r - r_prime
    return (diff + ore_mul(r, r_prime)).is_zero() and (diff + ore_mul(r_prime, r)).is_zero()


def check_uniqueness(r: OrePoly, candidates: Sequence[OrePoly]) -> bool:
    """All candidates (each a verified quasi-inverse of ``r``) coincide."""
    for c in candidates:
        if not verify_quasi_inverse(r, c):
            raise PreconditionViolated(f"{c} is not a quasi-inverse of {r}")
    return all(c == candidates[0] for c in candidates[1:])


def conjugated_quasi_inverse(i: int, r: OrePoly, bound: int) -> QuasiInverseResult:
    """Quasi-inverse of ``x^i r x^-i``.

    Computed directly from the conjugate's series and compared against the
    conjugate of ``r``'s quasi-inverse; the two must agree, and in particular
    have equal degree.
    """
    base = quasi_inverse_nilpotent(r, bound)
    direct = quasi_inverse_nilpotent(conjugate(r, i), bound)
    transported = conjugate(base.inverse, i)
    if direct.inverse != transported:
        raise LemmaViolation(f"quasi-inverse of x^{i} r x^-{i} differs from the conjugated quasi-inverse")
    if direct.inverse.degree() != base.inverse.degree():
        raise LemmaViolation(
            f"degree {direct.inverse.degree()} of the conjugate's quasi-inverse "
            f"!= degree {base.inverse.degree()}"
        )
    return direct
