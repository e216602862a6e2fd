"""
The matrix field F_q[P] generated by the companion matrix P of a monic
irreducible polynomial.

An element is stored as its polynomial representative rep (degree < s). The
row vector u times the matrix a(P) is the coefficient vector of
u(x) * rep_a(x) mod modulus, which is how the construction multiplies
without building matrices.
"""
from functools import lru_cache

import numpy as np

from .exceptions import DimensionMismatchError, DivisionByZeroError, ParameterError
from .fields import PolyFq, base_digits, is_irreducible, poly_inverse_mod
from .linalg import MatrixFq, matmul_arrays, solve_left


def companion_matrix(f):
    """s x s matrix with 1s on the superdiagonal and last row (-f_0, ..., -f_{s-1})."""
    if f.is_zero or f.degree < 1:
        raise ParameterError('f must have degree s >= 1')
    if not f.is_monic:
        raise ParameterError('f must be monic')
    ctx = f.ctx
    s = f.degree
    entries = np.zeros((s, s), dtype=np.int64)
    for i in range(s - 1):
        entries[i, i + 1] = 1
    entries[s - 1] = ctx.plain(-ctx.array(f.vector(s + 1)[:s]))
    return MatrixFq(ctx, entries)


class CompanionAlgebra:
    """F_q[P] for P the companion matrix of modulus; a field with q**s elements."""

    def __init__(self, modulus, check=True):
        if not isinstance(modulus, PolyFq):
            raise ParameterError('modulus must be a PolyFq')
        if check and (modulus.degree < 1 or not modulus.is_monic or not is_irreducible(modulus)):
            raise ParameterError(f'modulus {modulus} must be monic irreducible of degree >= 1')
        self.modulus = modulus
        self.ctx = modulus.ctx
        self.degree = modulus.degree
        self.order = self.ctx.q ** self.degree
        self.companion = companion_matrix(modulus)

    def __eq__(self, other):
        if not isinstance(other, CompanionAlgebra):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f'CompanionAlgebra({self.modulus} over {self.ctx!r})'

    def element(self, index):
        """The element whose representative has encoding sum(rep[j] * q**j) = index."""
        if not 0 <= index < self.order:
            raise ParameterError(f'algebra index must satisfy 0 <= index < {self.order}, got {index}')
        return CompanionAlgebraElement(self, PolyFq(self.ctx, base_digits(index, self.ctx.q, self.degree)))

    @property
    def one(self):
        return self.element(1)

    def elements(self):
        for index in range(self.order):
            yield self.element(index)

    def matrix_of(self, rep):
        """rep evaluated at P as a matrix polynomial."""
        value = rep.galois(self.companion.field_array, elementwise=False)
        return MatrixFq.from_field_array(self.ctx, value)

    def krylov_rows(self, u):
        """The s x s matrix with rows u, uP, ..., uP^(s-1)."""
        rows = [np.asarray(u, dtype=np.int64)]
        for _ in range(1, self.degree):
            rows.append(matmul_arrays(self.ctx, rows[-1][None, :], self.companion.array)[0])
        return MatrixFq._wrap(self.ctx, np.vstack(rows))


class CompanionAlgebraElement:
    __slots__ = ('algebra', 'rep')

    def __init__(self, algebra, rep):
        self.algebra = algebra
        self.rep = rep % algebra.modulus

    @property
    def index(self):
        q = self.algebra.ctx.q
        return sum(v * q ** j for j, v in enumerate(self.rep.values))

    @property
    def is_zero(self):
        return self.rep.is_zero

    def vector(self):
        return self.rep.vector(self.algebra.degree)

    def matrix(self):
        return self.algebra.matrix_of(self.rep)

    def _check(self, other):
        if not isinstance(other, CompanionAlgebraElement) or other.algebra != self.algebra:
            raise ParameterError('algebra elements must share a modulus')

    def __add__(self, other):
        self._check(other)
        return CompanionAlgebraElement(self.algebra, self.rep + other.rep)

    def __mul__(self, other):
        self._check(other)
        return CompanionAlgebraElement(self.algebra, self.rep * other.rep)

    def inverse(self):
        if self.is_zero:
            raise DivisionByZeroError('the zero algebra element has no inverse')
        return CompanionAlgebraElement(self.algebra, poly_inverse_mod(self.rep, self.algebra.modulus))

    def __eq__(self, other):
        if not isinstance(other, CompanionAlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.rep == other.rep

    def __hash__(self):
        return hash((self.algebra.modulus, self.rep))

    def __repr__(self):
        return f'CompanionAlgebraElement({self.rep} mod {self.algebra.modulus})'


@lru_cache(maxsize=None)
def algebra_for(modulus):
    return CompanionAlgebra(modulus)


def _as_vector(ctx, vector, s, name):
    vector = np.asarray(vector, dtype=np.int64)
    if vector.shape != (s,):
        raise DimensionMismatchError(f'{name} must have length {s}, got {vector.size}')
    if vector.size and (vector.min() < 0 or vector.max() >= ctx.q):
        raise ParameterError(f'{name} entries must satisfy 0 <= e < {ctx.q}')
    return vector


def algebra_mul_row(u, a):
    """u . a(P) as the coefficient vector of u(x) * rep_a(x) mod modulus."""
    algebra = a.algebra
    u_poly = PolyFq(algebra.ctx, _as_vector(algebra.ctx, u, algebra.degree, 'u').tolist())
    return ((u_poly * a.rep) % algebra.modulus).vector(algebra.degree)


def algebra_div(w, u, modulus):
    """
    The unique a with u . a(P) = w.

    For u != 0 the rows u, uP, ..., uP^(s-1) are a basis of F_q^s, and the
    coordinates of w in that basis are the coefficients of rep_a.
    """
    algebra = algebra_for(modulus)
    s = algebra.degree
    u = _as_vector(algebra.ctx, u, s, 'u')
    w = _as_vector(algebra.ctx, w, s, 'w')
    if not u.any():
        raise DivisionByZeroError('u must be nonzero')
    coeffs = solve_left(algebra.krylov_rows(u), w)
    if coeffs is None:
        raise AssertionError(f'{u.tolist()} does not generate F_q^{s} under P; is {modulus} irreducible?')
    return CompanionAlgebraElement(algebra, PolyFq(algebra.ctx, coeffs.tolist()))
