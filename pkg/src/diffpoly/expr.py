"""A small expression language for elements of R[x, x^-1; d].

An expression is a signed sum of terms; a term is a ``*``-separated product
of factors, each of which is a rational literal (``3``, ``1/2``), a basis
label, ``x`` or ``x^e`` with an integer ``e``.  Factors multiply in the order
written, so ``x*v`` and ``v*x`` differ.  ``0`` is the zero polynomial.
"""

from __future__ import annotations

import re

from .derivation import Derivation
from .errors import DiffPolyError
from .ore import OrePoly, ore_mul
from .rational import to_rational

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<pow>x\s*\^\s*[-+]?\s*\d+|x\b)"
                    r"|(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<op>[-+*]))")


class ExpressionError(DiffPolyError, ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1} of {text!r}")


def _tokens(text: str):
    pos = 0
    text_end = len(text.rstrip())
    while pos < text_end:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(text, pos, "unexpected character")
        kind = m.lastgroup
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()


def parse_expression(text: str, d: Derivation) -> OrePoly:
    algebra = d.parent
    tokens = list(_tokens(text))
    if not tokens:
        raise ExpressionError(text, 0, "empty expression")
    total = OrePoly.zero(d)
    pos = 0

    def factor():
        nonlocal pos
        if pos >= len(tokens):
            raise ExpressionError(text, len(text), "expression ends early")
        kind, value, col = tokens[pos]
        pos += 1
        if kind == "num":
            try:
                return OrePoly.constant(d, to_rational(value))
            except ValueError:
                raise ExpressionError(text, col, f"bad rational {value!r}") from None
        if kind == "pow":
            e = int(re.sub(r"\s", "", value)[2:] or 1) if "^" in value else 1
            return OrePoly.x(d, e)
        if kind == "name":
            if value not in algebra.labels:
                raise ExpressionError(text, col, f"unknown basis label {value!r}")
            return OrePoly.constant(d, algebra.basis_element(value))
        raise ExpressionError(text, col, f"expected a factor, found {value!r}")

    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        pos = 1
    while True:
        term = factor()
        while pos < len(tokens) and tokens[pos][1] == "*":
            pos += 1
            term = ore_mul(term, factor())
        total = total + (term if sign > 0 else -term)
        if pos == len(tokens):
            return total
        kind, value, col = tokens[pos]
        if value not in ("+", "-"):
            raise ExpressionError(text, col, f"expected '+' or '-', found {value!r}")
        sign = -1 if value == "-" else 1
        pos += 1
