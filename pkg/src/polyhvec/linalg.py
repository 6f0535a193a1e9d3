"""Exact linear algebra over the integers and rationals.

Everything here works on small dense matrices given as lists of rows.
Determinants use Bareiss fraction-free elimination (integer-exact);
rank and pivot selection use integer cross-elimination with gcd
reduction; linear systems are solved over fractions.Fraction.  No
floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction


def mat_det(rows) -> int:
    """Determinant of a square integer matrix, by Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by the Bareiss identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _reduce_row(row):
    g = 0
    for v in row:
        g = math.gcd(g, v)
    if g > 1:
        return [v // g for v in row]
    return list(row)


def _eliminate(rows):
    """Integer row echelon; returns (pivot row indices, pivot column indices)."""
    work = [_reduce_row(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivot_rows = []
    pivot_cols = []
    used = set()
    for col in range(ncols):
        pivot = None
        for i, row in enumerate(work):
            if i not in used and row[col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        used.add(pivot)
        pivot_rows.append(pivot)
        pivot_cols.append(col)
        prow = work[pivot]
        for i, row in enumerate(work):
            if i in used or row[col] == 0:
                continue
            factor = row[col]
            work[i] = _reduce_row(
                [a * prow[col] - factor * b for a, b in zip(row, prow)]
            )
    return pivot_rows, pivot_cols


def mat_rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    pivot_rows, _ = _eliminate(rows)
    return len(pivot_rows)


def pivot_rows(rows) -> list[int]:
    """Row indices forming an invertible square submatrix.

    Requires the matrix to have full column rank; raises ValueError
    otherwise.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    chosen, cols = _eliminate(rows)
    if len(cols) != ncols:
        raise ValueError(f"matrix has column rank {len(cols)} < {ncols}")
    return chosen


class LinearSolver:
    """Exact solves against a fixed nonsingular square matrix.

    The constructor performs one LU factorization over Fraction; each
    solve is then quadratic.
    """

    def __init__(self, rows):
        lu = [[Fraction(v) for v in row] for row in rows]
        n = len(lu)
        if any(len(r) != n for r in lu):
            raise ValueError("solver needs a square matrix")
        perm = list(range(n))
        for k in range(n):
            pivot = next((i for i in range(k, n) if lu[i][k] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            if pivot != k:
                lu[k], lu[pivot] = lu[pivot], lu[k]
                perm[k], perm[pivot] = perm[pivot], perm[k]
            inv = 1 / lu[k][k]
            for i in range(k + 1, n):
                if lu[i][k] == 0:
                    continue
                m = lu[i][k] * inv
                lu[i][k] = m
                row_i = lu[i]
                row_k = lu[k]
                for j in range(k + 1, n):
                    if row_k[j]:
                        row_i[j] -= m * row_k[j]
        self._lu = lu
        self._perm = perm
        self._n = n

    def solve(self, b) -> list[Fraction]:
        b = list(b)
        if len(b) != self._n:
            raise ValueError("right-hand side has wrong length")
        n = self._n
        lu = self._lu
        y = [Fraction(b[self._perm[i]]) for i in range(n)]
        for i in range(1, n):
            row = lu[i]
            acc = y[i]
            for j in range(i):
                if row[j]:
                    acc -= row[j] * y[j]
            y[i] = acc
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            row = lu[i]
            acc = y[i]
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * x[j]
            x[i] = acc / row[i]
        return x
