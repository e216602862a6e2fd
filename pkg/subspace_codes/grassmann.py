"""
Subspaces of F_q^n in canonical (RRE) form and the Grassmannian G_q(k, n).
"""
import itertools
import logging

import numpy as np

from .conf import get_setting
from .exceptions import BudgetExceededError, DimensionMismatchError, ParameterError
from .fields import field_for
from .linalg import MatrixFq, kernel_basis, matmul_arrays, rank_of_stack, rre, vstack

logger = logging.getLogger(__name__)


class Subspace:
    """
    A subspace stored as its unique RRE basis.

    Two Subspaces are equal iff their basis matrices are equal, which makes
    them usable as dict keys and set members.
    """

    __slots__ = ('n', 'basis', 'pivots')

    def __init__(self, basis, canonical=False):
        if canonical:
            reduced, pivots = basis, _pivots_of(basis)
        else:
            reduced, _, pivots = rre(basis)
        self.n = basis.cols
        self.basis = reduced
        self.pivots = pivots

    @classmethod
    def from_rows(cls, ctx, rows, n):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
        return cls(MatrixFq(ctx, rows))

    @classmethod
    def zero(cls, ctx, n):
        return cls(MatrixFq.zeros(ctx, 0, n), canonical=True)

    @classmethod
    def full(cls, ctx, n):
        return cls(MatrixFq.identity(ctx, n), canonical=True)

    @classmethod
    def coordinate(cls, ctx, n, positions):
        """Span of the unit vectors e_j for the given 0-based positions."""
        rows = np.zeros((len(positions), n), dtype=np.int64)
        for i, j in enumerate(sorted(positions)):
            rows[i, j] = 1
        return cls(MatrixFq(ctx, rows))

    @property
    def ctx(self):
        return self.basis.ctx

    @property
    def dim(self):
        return self.basis.rows

    @property
    def sort_key(self):
        return (self.dim, tuple(self.basis.array.ravel().tolist()))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f'Subspace(n={self.n}, dim={self.dim}, basis={self.basis.tolist()})'

    def reduce(self, vector):
        """The vector minus its component along the pivot rows; zero on pivot columns."""
        ctx = self.ctx
        v = np.asarray(vector, dtype=np.int64)
        if v.shape != (self.n,):
            raise DimensionMismatchError(f'vector has length {v.size}, ambient dimension is {self.n}')
        if not self.pivots:
            return v.copy()
        v = ctx.array(v)
        rows = self.basis.field_array
        for i, col in enumerate(self.pivots):
            if v[col]:
                v = v - v[col] * rows[i]
        return ctx.plain(v)

    def contains(self, vector):
        return not self.reduce(vector).any()

    def contains_subspace(self, other):
        _check_ambient(self, other)
        return all(self.contains(row) for row in other.basis.array)

    def vectors(self):
        """All q**dim vectors of the subspace, one per row."""
        ctx = self.ctx
        if self.dim == 0:
            return np.zeros((1, self.n), dtype=np.int64)
        coeffs = np.array(list(itertools.product(range(ctx.q), repeat=self.dim)), dtype=np.int64)
        return matmul_arrays(ctx, coeffs, self.basis.array)

    def point_mask(self):
        """Bitmask over F_q^n with bit sum(v_j * q**j) set for every vector v of the subspace."""
        q = self.ctx.q
        codes = self.vectors() @ (q ** np.arange(self.n, dtype=np.int64))
        bits = np.zeros(q ** self.n, dtype=bool)
        bits[codes] = True
        return int.from_bytes(np.packbits(bits, bitorder='little').tobytes(), 'little')


def _pivots_of(matrix):
    return tuple(int(np.flatnonzero(row)[0]) for row in matrix.array)


def _check_ambient(u, v):
    if u.n != v.n:
        raise DimensionMismatchError(f'ambient dimensions differ: {u.n} and {v.n}')
    u.ctx.check(v.ctx)


def distance(u, v):
    """d(U, V) = dim U + dim V - 2 dim(U & V) = 2 rank[U; V] - dim U - dim V."""
    _check_ambient(u, v)
    return 2 * rank_of_stack([u.basis, v.basis]) - u.dim - v.dim


def subspace_sum(u, v):
    _check_ambient(u, v)
    return Subspace(vstack([u.basis, v.basis]))


def span(subspaces, ctx=None, n=None):
    """Sum of all given subspaces; ctx and n are needed only for an empty input."""
    subspaces = list(subspaces)
    if not subspaces:
        if ctx is None or n is None:
            raise ParameterError('the span of nothing needs ctx and n')
        return Subspace.zero(ctx, n)
    for other in subspaces[1:]:
        _check_ambient(subspaces[0], other)
    return Subspace(vstack([s.basis for s in subspaces]))


def orthogonal(u):
    """{v : v . w = 0 for all w in U}, of dimension n - dim U."""
    return Subspace(kernel_basis(u.basis))


def intersect(u, v):
    result = orthogonal(subspace_sum(orthogonal(u), orthogonal(v)))
    if get_setting('STRICT_CHECKS'):
        total = rank_of_stack([u.basis, v.basis])
        if result.dim != u.dim + v.dim - total:
            raise AssertionError(f'intersection has dimension {result.dim}, expected {u.dim + v.dim - total}')
    return result


def intersection_dim(u, v):
    _check_ambient(u, v)
    return u.dim + v.dim - rank_of_stack([u.basis, v.basis])


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of F_q^n, exactly."""
    if not 0 <= k <= n:
        raise ParameterError(f'k must satisfy 0 <= k <= n, got k={k}, n={n}')
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_grassmannian(q, k, n, budget=None):
    """
    Yield every element of G_q(k, n) once, as RRE matrices ordered by pivot
    set and then by free entries.

    The count is checked against the budget before anything is yielded.
    """
    ctx = field_for(q)
    if not 0 <= k <= n:
        raise ParameterError(f'k must satisfy 0 <= k <= n, got k={k}, n={n}')
    if budget is None:
        budget = get_setting('GRASSMANNIAN_BUDGET')
    count = gaussian_binomial(n, k, ctx.q)
    if count > budget:
        raise BudgetExceededError(f'G_{ctx.q}({k},{n})', count, budget)
    logger.debug('Enumerating %s subspaces of G_%s(%s,%s)', count, ctx.q, k, n)
    return _grassmannian(ctx, k, n)


def _grassmannian(ctx, k, n):
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        base = np.zeros((k, n), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for values in itertools.product(range(ctx.q), repeat=len(free)):
            entries = base.copy()
            for (i, j), value in zip(free, values):
                entries[i, j] = value
            yield Subspace(MatrixFq._wrap(ctx, entries), canonical=True)
