"""Row-space arithmetic over finite fields.

Subspaces are stored as matrices whose rows span them, kept in reduced row
echelon form with zero rows dropped, so two subspaces are equal exactly when
their stored matrices are equal.
"""

from __future__ import annotations

import numpy as np


def rref(mat):
    """Reduced row echelon form without zero rows."""
    if mat.shape[0] == 0:
        return mat
    reduced = mat.row_reduce()
    keep = np.any(reduced.view(np.ndarray) != 0, axis=1)
    return reduced[keep]


def rank(mat) -> int:
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        return 0
    return int(np.linalg.matrix_rank(mat))


def same_span(a, b) -> bool:
    ra, rb = rref(a), rref(b)
    return ra.shape == rb.shape and np.array_equal(ra.view(np.ndarray), rb.view(np.ndarray))


def span_sum(a, b):
    field = type(a)
    if a.shape[0] == 0:
        return rref(b)
    if b.shape[0] == 0:
        return rref(a)
    return rref(field(np.vstack([a.view(np.ndarray), b.view(np.ndarray)])))


def span_intersection(a, b):
    """Rows spanning rowspace(a) ∩ rowspace(b)."""
    field = type(a)
    width = a.shape[1]
    if a.shape[0] == 0 or b.shape[0] == 0:
        return field.Zeros((0, width))
    a, b = rref(a), rref(b)
    stacked = field(np.vstack([a.view(np.ndarray), b.view(np.ndarray)]))
    relations = stacked.left_null_space()
    if relations.shape[0] == 0:
        return field.Zeros((0, width))
    return rref(relations[:, : a.shape[0]] @ a)


def contains_vector(basis, v) -> bool:
    if basis.shape[0] == 0:
        return not np.any(v.view(np.ndarray))
    field = type(basis)
    stacked = field(np.vstack([basis.view(np.ndarray), v.view(np.ndarray).reshape(1, -1)]))
    return rank(stacked) == rank(basis)
