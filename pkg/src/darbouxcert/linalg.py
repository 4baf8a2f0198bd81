"""Exact kernel computation shared by the relation-space builders."""

from __future__ import annotations


def rref_kernel_basis(rows, width: int, zero, one) -> list[tuple]:
    """Kernel basis of the matrix given by `rows`, each of length `width`.

    Reduced row echelon form with first-nonzero pivots; one basis vector per
    free column, carrying a unit in its free position.  The RREF is unique,
    so the result does not depend on the input row order.  Entries may be
    Fraction or FieldScalar (anything with exact field operators).
    """
    mat = [list(row) for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for i in range(rank, len(mat)):
            if mat[i][col] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [x / inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != zero:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vector = [zero] * width
        vector[free] = one
        for row_index, pivot_col in enumerate(pivots):
            vector[pivot_col] = -mat[row_index][free]
        basis.append(tuple(vector))
    return basis
