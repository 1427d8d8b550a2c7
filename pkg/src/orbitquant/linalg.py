"""Small exact linear algebra over Fractions (row reduction)."""

from __future__ import annotations

from fractions import Fraction


def _rows(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def row_echelon(matrix):
    """Return ``(reduced_rows, pivot_columns)`` of the reduced row echelon form."""
    a = _rows(matrix)
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][col]
        a[r] = [x / lead for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(matrix) -> int:
    return len(row_echelon(matrix)[1])


def inverse(matrix):
    """Exact inverse of a square matrix; raises ZeroDivisionError if singular."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_rows(matrix))]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]
