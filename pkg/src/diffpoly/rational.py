"""Exact rational scalars.

``Rational`` is :class:`gmpy2.mpq`: arbitrary precision, always in lowest terms
with a positive denominator, and roughly ten times faster than
:class:`fractions.Fraction`.  It compares and hashes equal to the matching
``Fraction`` and ``int``, so callers may pass either.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

Rational = type(mpq(0))
ZERO = mpq(0)
ONE = mpq(1)

SCALAR_TYPES = (int, Fraction, Rational)


def is_scalar(value) -> bool:
    return isinstance(value, SCALAR_TYPES) and not isinstance(value, bool)


def to_rational(value) -> Rational:
    """Coerce ints, Fractions, mpq and ``"p/q"`` strings to a Rational.

    Floats are refused: exactness is never traded for convenience.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not a rational literal: {value!r}")
        num, _, den = text.partition("/")
        try:
            return mpq(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@lru_cache(maxsize=4096)
def binomial(n: int, i: int) -> Rational:
    """Binomial coefficient ``n(n-1)...(n-i+1)/i!`` as an exact rational.

    Defined for every integer ``n`` (negative ``n`` gives the generalized
    coefficient used when commuting ``x^n`` past algebra elements), and is 0
    for ``0 <= n < i``.
    """
    if i < 0:
        return ZERO
    num = 1
    den = 1
    for t in range(i):
        num *= n - t
        den *= t + 1
    return mpq(num, den)
