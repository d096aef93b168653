"""Exact dense linear algebra over Q or a number field.

Matrices are lists of rows.  Entries may be ints, Fractions or NFElements;
all pivoting is exact.
"""

from __future__ import annotations

from .exactnum import qdiv, qnorm

__all__ = ["rref", "rank", "nullspace", "solve", "inverse", "matmul", "matvec", "identity",
           "independent_columns"]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[_dot(row, col) for col in cols] for row in a]


def matvec(a, v):
    return [_dot(row, v) for row in a]


def _dot(x, y):
    acc = 0
    for p, q in zip(x, y):
        if p != 0 and q != 0:
            acc = acc + p * q
    return acc


def rref(mat):
    """Reduced row echelon form and the list of pivot columns."""
    a = [list(r) for r in mat]
    if not a:
        return a, []
    rows, cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [qdiv(x, pv) for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [qnorm(x - f * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat):
    return len(rref(mat)[1])


def independent_columns(mat):
    """Lexicographically first maximal set of independent columns."""
    return rref(mat)[1]


def nullspace(mat):
    """Basis of {x : mat x = 0}."""
    if not mat:
        return []
    r, piv = rref(mat)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, p in enumerate(piv):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One solution x of mat x = rhs, or None when inconsistent."""
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    r, piv = rref(aug)
    cols = len(mat[0])
    if cols in piv:
        return None
    x = [0] * cols
    for i, p in enumerate(piv):
        x[p] = r[i][cols]
    return x


def inverse(mat):
    n = len(mat)
    aug = [list(row) + e for row, e in zip(mat, identity(n))]
    r, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in r]
