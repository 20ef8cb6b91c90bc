"""Exact dense linear algebra on small matrices.

Matrices are plain lists of rows.  Entries may be ``int``/``Fraction``,
``GQ`` or ``DualGQ``; all arithmetic is exact, so rank decisions are
tolerance-free.  Pivoting is deterministic (first unit entry scanning
columns left to right, rows top to bottom) which keeps every report
reproducible.
"""

from __future__ import annotations

from .scalars import is_unit


def rank_exact(rows):
    """Exact rank by Gaussian elimination with deterministic pivoting."""
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = _inv(m[rank][col])
        for r in range(rank + 1, nrows):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _inv(x):
    if hasattr(x, "inv"):
        return x.inv()
    from fractions import Fraction
    return Fraction(1, 1) / x


def invert_matrix(rows):
    """Inverse of a square matrix; pivots must be units of the entry ring.

    Works over ``GQ`` and over the local ring ``DualGQ`` (pivot test is on
    the value part via ``is_unit``).  Raises ``ValueError`` when singular.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    m = [list(r) for r in rows]
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if is_unit(m[r][col]):
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        ident[col], ident[pivot] = ident[pivot], ident[col]
        inv = _inv(m[col][col])
        m[col] = [inv * a for a in m[col]]
        ident[col] = [inv * a for a in ident[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
                ident[r] = [a - factor * b
                            for a, b in zip(ident[r], ident[col])]
    return ident


def mat_mul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), 0)
             for col in zip(*b)] for row in a]


def span_dim(vectors):
    """Dimension of the span of a list of equal-length vectors."""
    return rank_exact(vectors) if vectors else 0
