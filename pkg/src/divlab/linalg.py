"""Small exact linear algebra over Q (matrices are lists of Fraction rows)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, len(rows)):
            if rows[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows) -> int:
    """Rank via fraction-free (Bareiss) elimination on a cleared-denominator
    integer copy."""
    if not rows:
        return 0
    m = []
    for row in rows:
        den = 1
        fr = [Fraction(x) for x in row]
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        m.append([int(x * den) for x in fr])
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, nrows):
            if m[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for k in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[k][j] = (m[r][c] * m[k][j] - m[k][c] * m[r][j]) // prev
            m[k][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def kernel_basis(rows):
    """Canonical basis of the right kernel {x : A x = 0}.

    One vector per free column of the RREF: 1 at that column, pivot entries
    back-substituted.  Deterministic.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r_idx, pc in enumerate(pivots):
            v[pc] = -red[r_idx][fc]
        basis.append(v)
    return basis


def row_space_basis(rows):
    """Canonical (RREF, nonzero) basis of the row space."""
    red, pivots = rref(rows)
    return [red[i] for i in range(len(pivots))]


def in_row_space(rows_basis, vector) -> bool:
    """Is ``vector`` in the span of ``rows_basis``?"""
    stacked = list(rows_basis) + [list(vector)]
    return rank(stacked) == rank(list(rows_basis))
