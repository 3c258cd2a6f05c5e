# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Exact linear algebra over F_q.

The reduced row echelon form is the single canonical form used throughout
balsys. All functions are pure; matrices are immutable.
"""

import logging
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, InternalConsistencyError
from .field import FqVector

logger = logging.getLogger(__name__)


class FqMatrix:
    """An immutable ``r x c`` matrix over F_q.

    Parameters
    ----------
    ctx : :class:`~balsys.core.field.FieldCtx`
        The field.
    entries : array-like
        Rows of element encodings.

    """

    def __init__(self, ctx, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionError(f"Expected a two-dimensional array, got shape {arr.shape}.")
        ctx.check(arr)
        arr.setflags(write=False)
        self._ctx = ctx
        self._entries = arr
        self._rref = None

    @classmethod
    def from_signed(cls, ctx, rows):
        """Build a matrix from signed integers reduced into the prime subfield."""
        return cls(ctx, ctx.from_int(np.array(rows, dtype=np.int64)))

    @classmethod
    def zeros(cls, ctx, rows, cols):
        """Return the ``rows x cols`` zero matrix."""
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @property
    def ctx(self):
        """:class:`~balsys.core.field.FieldCtx`: The field."""
        return self._ctx

    @property
    def entries(self):
        """numpy.ndarray: Read-only array of encodings."""
        return self._entries

    @property
    def rows(self):
        """int: Number of rows."""
        return self._entries.shape[0]

    @property
    def cols(self):
        """int: Number of columns."""
        return self._entries.shape[1]

    @property
    def shape(self):
        """tuple: ``(rows, cols)``."""
        return self._entries.shape

    def row(self, i):
        """Return row ``i`` as a tuple."""
        return tuple(int(a) for a in self._entries[i])

    def column(self, j):
        """Return column ``j`` as a tuple."""
        return tuple(int(a) for a in self._entries[:, j])

    def submatrix(self, columns):
        """Return the matrix restricted to the given columns (in that order)."""
        return FqMatrix(self._ctx, self._entries[:, list(columns)].reshape(self.rows, -1))

    def select_rows(self, rows):
        """Return the matrix restricted to the given rows."""
        return FqMatrix(self._ctx, self._entries[list(rows), :].reshape(-1, self.cols))

    def append_row(self, b):
        """Return a new matrix with row ``b`` appended."""
        b = np.asarray(b, dtype=np.int64).reshape(1, -1)
        if b.shape[1] != self.cols:
            raise DimensionError(f"Row of length {b.shape[1]} for {self.cols} columns.")
        return FqMatrix(self._ctx, np.vstack([self._entries, b]))

    def apply(self, points):
        """Apply the matrix columnwise to a tuple of vectors.

        Parameters
        ----------
        points : array-like
            ``c x n`` array, row ``j`` being the j-th vector of the tuple.

        Returns
        -------
        numpy.ndarray
            ``r x n`` array, row ``i`` being ``sum_j a_ij x_j``.

        """
        points = np.asarray(points, dtype=np.int64)
        if points.shape[0] != self.cols:
            raise DimensionError(f"Tuple of length {points.shape[0]} for {self.cols} columns.")
        if self._ctx.s == 1:
            return (self._entries @ points) % self._ctx.p
        return np.array(
            [self._ctx.combine(row, points) for row in self._entries], dtype=np.int64
        ).reshape(self.rows, *points.shape[1:])

    def tolist(self):
        """Return the entries as nested lists of ints."""
        return self._entries.tolist()

    def __eq__(self, other):
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return self._ctx == other._ctx and np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash((self._ctx, self._entries.shape, self._entries.tobytes()))

    def __repr__(self):
        return f"FqMatrix(q={self._ctx.label}, {self.tolist()})"


def fq_matmul(ctx, A, B):
    """Return the matrix product ``A @ B`` of two encoding arrays over F_q."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[-1] != B.shape[0]:
        raise DimensionError(f"Cannot multiply shapes {A.shape} and {B.shape}.")
    if ctx.s == 1:
        return (A @ B) % ctx.p
    out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    for t in range(B.shape[0]):
        out = ctx.add(out, ctx.mul(A[..., t : t + 1], B[t : t + 1]))
    return out


class RrefResult(NamedTuple):
    """Reduced row echelon form of a matrix."""

    rref: FqMatrix
    pivots: tuple
    rank: int


def rref(M):
    """Return the unique reduced row echelon form of ``M``.

    Parameters
    ----------
    M : :class:`FqMatrix`
        The matrix.

    Returns
    -------
    :class:`RrefResult`
        The echelon form (same shape as ``M``, zero rows last), its pivot
        columns and the rank.

    """
    if M._rref is not None:
        return M._rref
    ctx = M.ctx
    A = np.array(M.entries, dtype=np.int64)
    rows, cols = A.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = ctx.mul(ctx.inv(int(A[r, c])), A[r])
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = ctx.sub(A[i], ctx.mul(int(A[i, c]), A[r]))
        pivots.append(c)
        r += 1
    result = RrefResult(FqMatrix(ctx, A), tuple(pivots), r)
    M._rref = result
    return result


def rank(M):
    """Return the rank of ``M``."""
    return rref(M).rank


def reduced_rows(M):
    """Return the nonzero rows of the echelon form of ``M`` as a matrix."""
    result = rref(M)
    return result.rref.select_rows(range(result.rank))


def kernel_basis(M):
    """Return a basis of ``{v : M v = 0}``.

    Basis vectors are ordered by their free column; each has entry 1 in its
    own free column and 0 in the other free columns.

    Returns
    -------
    list[:class:`~balsys.core.field.FqVector`]
        ``cols - rank`` vectors of length ``cols``.

    """
    ctx = M.ctx
    result = rref(M)
    R = result.rref.entries
    free = [c for c in range(M.cols) if c not in result.pivots]
    basis = []
    for f in free:
        v = np.zeros(M.cols, dtype=np.int64)
        v[f] = 1
        for r, pc in enumerate(result.pivots):
            v[pc] = ctx.neg(int(R[r, f]))
        if M.rows and np.any(M.apply(v.reshape(-1, 1))):
            raise InternalConsistencyError(f"Kernel vector {v.tolist()} is not annihilated.")
        basis.append(FqVector(ctx, tuple(v.tolist())))
    return basis


def reduce_against(M, b):
    """Return the remainder of row vector ``b`` after reduction by the echelon form of ``M``."""
    ctx = M.ctx
    b = np.array(b, dtype=np.int64).reshape(-1)
    if b.shape[0] != M.cols:
        raise DimensionError(f"Row of length {b.shape[0]} for {M.cols} columns.")
    result = rref(M)
    R = result.rref.entries
    for r, pc in enumerate(result.pivots):
        if b[pc]:
            b = ctx.sub(b, ctx.mul(int(b[pc]), R[r]))
    return b


def rowspace_contains(M, b):
    """Return True iff ``b`` is a linear combination of the rows of ``M``.

    Raises
    ------
    DimensionError
        If ``b`` does not have ``cols`` entries.

    """
    return not np.any(reduce_against(M, b))


def rowspace_contains_all(M, vectors):
    """Return True iff every vector lies in the rowspace of ``M``."""
    return all(rowspace_contains(M, v) for v in vectors)


def _ctx_of(points, ctx):
    if ctx is not None:
        return ctx
    try:
        return points[0].ctx
    except (AttributeError, IndexError, TypeError):
        raise DimensionError("A field context is required for plain coordinate tuples.")


def augmented_matrix(points, ctx=None):
    """Return the ``(n+1) x k`` matrix with an all-ones top row and the points as columns."""
    ctx = _ctx_of(points, ctx)
    arr = np.asarray([tuple(p) for p in points], dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise DimensionError("Expected a non-empty tuple of equal-length vectors.")
    return FqMatrix(ctx, np.vstack([np.ones((1, arr.shape[0]), dtype=np.int64), arr.T]))


def coordinate_matrix(points, ctx=None):
    """Return the ``n x k`` matrix with the points as columns."""
    ctx = _ctx_of(points, ctx)
    arr = np.asarray([tuple(p) for p in points], dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise DimensionError("Expected a non-empty tuple of equal-length vectors.")
    return FqMatrix(ctx, arr.T.reshape(arr.shape[1], arr.shape[0]))


def affine_dim(points, ctx=None):
    """Return the dimension of the affine hull of the points.

    Parameters
    ----------
    points : sequence
        :class:`~balsys.core.field.FqVector` instances or coordinate tuples.
    ctx : :class:`~balsys.core.field.FieldCtx`
        Required unless the points are :class:`~balsys.core.field.FqVector`.

    Raises
    ------
    DimensionError
        For an empty tuple or vectors of different lengths.

    """
    return rank(augmented_matrix(points, ctx)) - 1


__all__ = [
    "FqMatrix",
    "RrefResult",
    "affine_dim",
    "augmented_matrix",
    "coordinate_matrix",
    "fq_matmul",
    "kernel_basis",
    "rank",
    "reduce_against",
    "reduced_rows",
    "rowspace_contains",
    "rowspace_contains_all",
    "rref",
]
