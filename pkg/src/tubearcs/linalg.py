"""Exact rational linear algebra on small sparse systems.

Rows are dicts ``{column: value}``; values are coerced to ``Fraction`` so
no entry is ever rounded.
"""

from fractions import Fraction


def sparse_rank(rows, ncols=None):
    """Rank of the matrix whose rows are given as ``{col: value}`` dicts.

    Incremental Gaussian elimination; the pivot of each row is its first
    nonzero column, so reducing by a stored pivot row only touches columns to
    its right.
    """
    pivots = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v != 0}
        if ncols is not None and any(not 0 <= c < ncols for c in row):
            raise IndexError("column index out of range")
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                break
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def nullity(rows, ncols):
    return ncols - sparse_rank(rows, ncols)


def dense_rank(matrix):
    """Rank of a dense list-of-lists matrix (row echelon by first nonzero pivot)."""
    rows = [{j: v for j, v in enumerate(r) if v != 0} for r in matrix]
    ncols = len(matrix[0]) if matrix else 0
    return sparse_rank(rows, ncols)


def zeros(nrows, ncols):
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(x, y, inner=None):
    """Product of dense matrices; ``inner`` is needed only when x has no rows."""
    if inner is None:
        inner = len(x[0]) if x else len(y)
    ncols = len(y[0]) if y else 0
    out = zeros(len(x), ncols)
    for i, xi in enumerate(x):
        oi = out[i]
        for k in range(inner):
            v = xi[k]
            if v:
                yk = y[k]
                for j in range(ncols):
                    if yk[j]:
                        oi[j] += v * yk[j]
    return out


def is_zero(m):
    return all(v == 0 for row in m for v in row)
