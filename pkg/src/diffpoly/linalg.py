"""Exact linear algebra over the rationals (row reduction and square solves)."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .rational import ZERO, Rational, to_rational

Row = Tuple[Rational, ...]


def rref(rows: Sequence[Sequence[Rational]], ncols: int) -> Tuple[List[Row], List[int]]:
    """Reduced row-echelon form of ``rows``; zero rows are dropped.

    Returns the nonzero reduced rows and their pivot columns.  The result is
    canonical for the row space, so two spanning sets of the same space give
    identical output.
    """
    m = [list(r) for r in rows if any(r)]
    pivots: List[int] = []
    piv_r = 0
    for c in range(ncols):
        if piv_r == len(m):
            break
        for r in range(piv_r, len(m)):
            if m[r][c] != 0:
                break
        else:
            continue
        m[piv_r], m[r] = m[r], m[piv_r]
        lead = m[piv_r][c]
        if lead != 1:
            m[piv_r] = [v / lead for v in m[piv_r]]
        prow = m[piv_r]
        for r2 in range(len(m)):
            if r2 != piv_r:
                f = m[r2][c]
                if f != 0:
                    m[r2] = [a - f * b for a, b in zip(m[r2], prow)]
        pivots.append(c)
        piv_r += 1
    return [tuple(r) for r in m[:piv_r]], pivots


def reduce_against(basis: Sequence[Row], pivots: Sequence[int], v: Sequence[Rational]) -> List[Rational]:
    """Residue of ``v`` after eliminating the pivot columns of an rref basis."""
    out = list(v)
    for row, c in zip(basis, pivots):
        f = out[c]
        if f != 0:
            out = [a - f * b for a, b in zip(out, row)]
    return out


def solve_square(matrix: Sequence[Sequence[Rational]], rhs: Sequence[Sequence[Rational]]) -> List[List[Rational]]:
    """Solve ``matrix @ X = rhs`` exactly for a nonsingular square ``matrix``.

    ``rhs`` has one row per equation and any number of columns.  Gaussian
    elimination with partial pivoting on the largest numerator magnitude.
    Raises ``ZeroDivisionError`` if the matrix is singular.
    """
    n = len(matrix)
    a = [list(map(to_rational, row)) for row in matrix]
    b = [list(map(to_rational, row)) for row in rhs]
    for c in range(n):
        p = max(range(c, n), key=lambda r: abs(a[r][c].numerator))
        if a[p][c] == 0:
            raise ZeroDivisionError("singular system")
        a[c], a[p] = a[p], a[c]
        b[c], b[p] = b[p], b[c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                b[r] = [x - f * y for x, y in zip(b[r], b[c])]
    ncols = len(b[0]) if b else 0
    x = [[ZERO] * ncols for _ in range(n)]
    for r in range(n - 1, -1, -1):
        acc = list(b[r])
        for c in range(r + 1, n):
            f = a[r][c]
            if f:
                acc = [s - f * t for s, t in zip(acc, x[c])]
        x[r] = [s / a[r][r] for s in acc]
    return x


def mat_mul(a: Sequence[Sequence[Rational]], b: Sequence[Sequence[Rational]]) -> List[List[Rational]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in cols] for row in a]
