"""
Dense matrices over F_q.

A MatrixFq wraps a read-only int64 numpy array of element encodings together
with its FieldCtx. Arithmetic, row reduction and null spaces run on the
equivalent galois FieldArray; the integer array is what the rest of the
package hashes, compares and serializes.

Column indices are 0-based here; user-facing messages print them 1-based.
"""
import logging
from typing import NamedTuple

import numpy as np

from .exceptions import DimensionMismatchError, FieldMismatchError, ParameterError

logger = logging.getLogger(__name__)


class MatrixFq:
    """Immutable rows x cols matrix of integer-encoded elements of ctx."""

    __slots__ = ('ctx', 'array')

    def __init__(self, ctx, entries, rows=None, cols=None):
        array = np.array(entries, dtype=np.int64)
        if rows is not None or cols is not None:
            if rows is None or cols is None:
                raise ParameterError('rows and cols must be given together')
            array = array.reshape(rows, cols)
        elif array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:
            raise DimensionMismatchError(f'matrix entries must be two-dimensional, got shape {array.shape}')
        if array.size and (array.min() < 0 or array.max() >= ctx.q):
            raise ParameterError(f'entries must satisfy 0 <= e < {ctx.q}')
        array.setflags(write=False)
        self.ctx = ctx
        self.array = array

    @classmethod
    def _wrap(cls, ctx, array):
        # trusted constructor for arrays that are already valid encodings
        obj = cls.__new__(cls)
        array = np.ascontiguousarray(array, dtype=np.int64)
        array.setflags(write=False)
        obj.ctx = ctx
        obj.array = array
        return obj

    @classmethod
    def from_field_array(cls, ctx, values):
        return cls._wrap(ctx, ctx.plain(values))

    @classmethod
    def zeros(cls, ctx, rows, cols):
        return cls._wrap(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx, n):
        return cls._wrap(ctx, np.eye(n, dtype=np.int64))

    @classmethod
    def random(cls, ctx, rng, rows, cols):
        return cls._wrap(ctx, ctx.random(rng, (rows, cols)))

    @property
    def field_array(self):
        return self.ctx.GF(self.array)

    @property
    def rows(self):
        return self.array.shape[0]

    @property
    def cols(self):
        return self.array.shape[1]

    @property
    def shape(self):
        return self.array.shape

    def tolist(self):
        return self.array.tolist()

    @property
    def T(self):
        return MatrixFq._wrap(self.ctx, self.array.T)

    def _same_field(self, other):
        if not isinstance(other, MatrixFq):
            raise FieldMismatchError(f'cannot combine a matrix with {type(other).__name__}')
        self.ctx.check(other.ctx)

    def __matmul__(self, other):
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f'cannot multiply {self.shape} by {other.shape}')
        return MatrixFq._wrap(self.ctx, matmul_arrays(self.ctx, self.array, other.array))

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return (self.ctx == other.ctx and self.shape == other.shape
                and np.array_equal(self.array, other.array))

    def __hash__(self):
        return hash((self.ctx.key, self.shape, self.array.tobytes()))

    def __repr__(self):
        return f'MatrixFq({self.rows}x{self.cols} over {self.ctx!r}, {self.tolist()})'

    def rre(self):
        return rre(self)

    @property
    def rank(self):
        return rre(self).rank


def matmul_arrays(ctx, a, b):
    """Product of two encoding arrays; a is (r, l), b is (l, c)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if not (a.shape[0] and a.shape[1] and b.shape[1]):
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    return ctx.plain(ctx.GF(a) @ ctx.GF(b))


class RREResult(NamedTuple):
    matrix: MatrixFq
    rank: int
    pivots: tuple


def rre_array(ctx, array):
    """Row-reduce a copy of array; returns (nonzero reduced rows, pivot columns)."""
    a = np.asarray(array, dtype=np.int64)
    rows, cols = a.shape
    if not (rows and cols) or not a.any():
        return np.zeros((0, cols), dtype=np.int64), ()
    reduced = ctx.plain(ctx.GF(a).row_reduce())
    # row_reduce leaves the zero rows at the bottom
    reduced = reduced[reduced.any(axis=1)]
    pivots = tuple(int(np.flatnonzero(row)[0]) for row in reduced)
    return reduced, pivots


def rre(matrix):
    """
    Reduced row-echelon form with zero rows dropped.

    Pivots are 1, every other entry of a pivot column is 0, and pivot columns
    increase down the rows, so the result is the unique RRE basis of the row
    space.
    """
    reduced, pivots = rre_array(matrix.ctx, matrix.array)
    return RREResult(MatrixFq._wrap(matrix.ctx, reduced.reshape(len(pivots), matrix.cols)),
                     len(pivots), pivots)


def rank(matrix):
    return rre(matrix).rank


def vstack(matrices, ctx=None, cols=None):
    """Vertical concatenation; ctx and cols are needed only for an empty list."""
    matrices = list(matrices)
    if not matrices:
        if ctx is None or cols is None:
            raise ParameterError('an empty stack needs ctx and cols')
        return MatrixFq.zeros(ctx, 0, cols)
    first = matrices[0]
    for m in matrices[1:]:
        first._same_field(m)
        if m.cols != first.cols:
            raise DimensionMismatchError(f'cannot stack a {m.cols}-column matrix under a {first.cols}-column matrix')
    return MatrixFq._wrap(first.ctx, np.vstack([m.array for m in matrices]))


def rank_of_stack(matrices):
    matrices = list(matrices)
    if not matrices:
        raise ParameterError('rank_of_stack needs at least one matrix')
    return rank(vstack(matrices))


def solve_left(matrix, b):
    """
    One solution y of y . matrix = b, or None when b is outside the row space.

    Free variables are set to zero, so the solution is deterministic.
    """
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (matrix.cols,):
        raise DimensionMismatchError(f'right-hand side has length {b.size}, matrix has {matrix.cols} columns')
    augmented = np.hstack([matrix.array.T, b[:, None]])
    reduced, pivots = rre_array(matrix.ctx, augmented)
    if pivots and pivots[-1] == matrix.rows:
        return None
    y = np.zeros(matrix.rows, dtype=np.int64)
    for i, col in enumerate(pivots):
        y[col] = reduced[i, -1]
    return y


def kernel_basis(matrix):
    """Basis (as RRE rows) of {x : matrix . x^T = 0}."""
    ctx = matrix.ctx
    n = matrix.cols
    if not matrix.array.any():
        return MatrixFq.identity(ctx, n)
    null = ctx.plain(matrix.field_array.null_space())
    return MatrixFq._wrap(ctx, null.reshape(-1, n))
