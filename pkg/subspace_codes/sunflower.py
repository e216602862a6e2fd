"""
The systematic sunflower construction F_q(k, n, c, p, p').

Write n - c = h(k - c) + r with 0 <= r < k - c. Every codeword is the row
space of a k x n matrix

    [ I_c   0  ]
    [ 0     B  ]

where the (k - c) x (n - c) lower block B is either the special block
[0 | I_{k-c}] or, for a family i in 1..h-1,

    [ 0 ... 0 | I_{k-c} | A_{i+1} ... A_{h-1} | last k-c rows of A ]

with i - 1 zero blocks, A_j in F_q[P] and A in F_q[P'], where P and P' are
the companion matrices of p (degree k - c) and p' (degree k - c + r). The
code is a sunflower whose center is spanned by the first c unit vectors.

Messages are numbered 0 (the special word) and then family by family in
increasing i; inside a family the index is mixed radix over
(a_{i+1}, ..., a_{h-1}, a), a_{i+1} varying fastest.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import CompanionAlgebra, companion_matrix
from .analysis import SubspaceCode, validate_parameters
from .conf import get_setting
from .exceptions import BudgetExceededError, ParameterError
from .fields import FieldCtx, PolyFq, field_for, find_irreducible, is_irreducible
from .grassmann import Subspace
from .linalg import MatrixFq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MessageIndex:
    """A message: the special word (family None) or (i, a_{i+1..h-1}, a)."""

    value: int
    family: int = None
    blocks: tuple = ()
    tail: object = None

    @property
    def is_special(self):
        return self.family is None

    def describe(self):
        if self.is_special:
            return {'index': self.value, 'word': 'SPECIAL'}
        return {
            'index': self.value,
            'family': self.family,
            'blocks': [a.index for a in self.blocks],
            'tail': self.tail.index,
        }


def _as_poly(ctx, value, name, degree):
    if value is None:
        return find_irreducible(ctx, degree)
    poly = value if isinstance(value, PolyFq) else PolyFq(ctx, value)
    ctx.check(poly.ctx)
    if poly.degree != degree or not poly.is_monic or not is_irreducible(poly):
        raise ParameterError(f'{name} must be monic irreducible of degree {degree}, got {poly}')
    return poly


@dataclass(frozen=True)
class SunflowerCodeSpec:
    ctx: FieldCtx
    k: int
    n: int
    c: int
    p: PolyFq
    p_prime: PolyFq
    h: int
    r: int

    @classmethod
    def build(cls, q, k, n, c, p=None, p_prime=None):
        """
        Validate parameters and polynomials. Missing polynomials default to
        find_irreducible of the required degree.
        """
        ctx = field_for(q)
        validate_parameters(ctx.q, k, n, c)
        h, r = divmod(n - c, k - c)
        p = _as_poly(ctx, p, 'p', k - c)
        p_prime = _as_poly(ctx, p_prime, 'p_prime', k - c + r)
        return cls(ctx=ctx, k=k, n=n, c=c, p=p, p_prime=p_prime, h=h, r=r)

    @property
    def q(self):
        return self.ctx.q

    @property
    def s(self):
        """k - c, the width of the middle blocks."""
        return self.k - self.c

    @cached_property
    def algebra(self):
        return CompanionAlgebra(self.p, check=False)

    @cached_property
    def tail_algebra(self):
        return CompanionAlgebra(self.p_prime, check=False)

    @property
    def companion(self):
        return companion_matrix(self.p)

    @property
    def tail_companion(self):
        return companion_matrix(self.p_prime)

    def family_size(self, i):
        return self.q ** (self.s * (self.h - 1 - i)) * self.q ** (self.s + self.r)

    @cached_property
    def cardinality(self):
        return 1 + sum(self.family_size(i) for i in range(1, self.h))

    @property
    def formula_cardinality(self):
        q, s, r = self.q, self.s, self.r
        return (q ** (self.n - self.c) - q ** r) // (q ** s - 1) - q ** r + 1

    def block_slice(self, j):
        """Columns of stripped block j (1..h-1 middle blocks, h the final block)."""
        start = (j - 1) * self.s
        if j == self.h:
            return slice(start, start + self.s + self.r)
        return slice(start, start + self.s)

    @property
    def center(self):
        return Subspace.coordinate(self.ctx, self.n, range(self.c))


def index_to_message(spec, value):
    if not 0 <= value < spec.cardinality:
        raise ParameterError(f'index must satisfy 0 <= index < {spec.cardinality}, got {value}')
    if value == 0:
        return MessageIndex(0)
    offset = 1
    for i in range(1, spec.h):
        size = spec.family_size(i)
        if value < offset + size:
            local = value - offset
            blocks = []
            for _ in range(i + 1, spec.h):
                local, digit = divmod(local, spec.algebra.order)
                blocks.append(spec.algebra.element(digit))
            return MessageIndex(value, i, tuple(blocks), spec.tail_algebra.element(local))
        offset += size
    raise AssertionError('unreachable: index within cardinality')


def message_to_index(spec, family=None, blocks=(), tail=None):
    """Inverse of index_to_message; elements may be given as algebra elements or indices."""
    if family is None:
        return 0
    if not 1 <= family <= spec.h - 1:
        raise ParameterError(f'family must satisfy 1 <= i <= h-1 = {spec.h - 1}, got {family}')
    blocks = [b.index if hasattr(b, 'index') else int(b) for b in blocks]
    tail = tail.index if hasattr(tail, 'index') else int(tail or 0)
    if len(blocks) != spec.h - 1 - family:
        raise ParameterError(f'family {family} takes h-1-i = {spec.h - 1 - family} block elements')
    if any(not 0 <= b < spec.algebra.order for b in blocks) or not 0 <= tail < spec.tail_algebra.order:
        raise ParameterError('algebra element indices out of range')
    local = tail
    for digit in reversed(blocks):
        local = local * spec.algebra.order + digit
    return 1 + sum(spec.family_size(i) for i in range(1, family)) + local


def _message(spec, msg):
    if isinstance(msg, MessageIndex):
        return msg
    return index_to_message(spec, int(msg))


def stripped_generator(spec, msg):
    """The (k-c) x (n-c) lower block of the generator matrix."""
    msg = _message(spec, msg)
    s = spec.s
    out = np.zeros((s, spec.n - spec.c), dtype=np.int64)
    if msg.is_special:
        out[:, -s:] = np.eye(s, dtype=np.int64)
        return MatrixFq._wrap(spec.ctx, out)
    out[:, spec.block_slice(msg.family)] = np.eye(s, dtype=np.int64)
    for j, a in zip(range(msg.family + 1, spec.h), msg.blocks):
        out[:, spec.block_slice(j)] = a.matrix().array
    out[:, spec.block_slice(spec.h)] = msg.tail.matrix().array[spec.r:]
    return MatrixFq._wrap(spec.ctx, out)


def generator_matrix(spec, msg):
    lower = stripped_generator(spec, msg)
    c = spec.c
    out = np.zeros((spec.k, spec.n), dtype=np.int64)
    out[:c, :c] = np.eye(c, dtype=np.int64)
    out[c:, c:] = lower.array
    return MatrixFq._wrap(spec.ctx, out)


def codeword(spec, msg):
    return Subspace(generator_matrix(spec, msg))


def check_budget(spec, budget=None):
    if budget is None:
        budget = get_setting('CODE_BUDGET')
    if spec.cardinality > budget:
        raise BudgetExceededError('code enumeration', spec.cardinality, budget)


def enumerate_code(spec, budget=None):
    check_budget(spec, budget)
    logger.debug('Enumerating %s codewords of F_%s(%s,%s,%s)', spec.cardinality, spec.q, spec.k, spec.n, spec.c)
    return SubspaceCode(codeword(spec, index) for index in range(spec.cardinality))


def stripped_code(spec, budget=None):
    """The partial spread {rowspace(B)} in G_q(k-c, n-c) behind the sunflower."""
    check_budget(spec, budget)
    return SubspaceCode(Subspace(stripped_generator(spec, index)) for index in range(spec.cardinality))


def dual_generator_matrix(spec, msg):
    """
    (n-k) x n generator of the orthogonal of a codeword.

    The first c columns are zero. On the stripped coordinates the word is
    [0 | I | R]; its orthogonal is spanned by the unit vectors on the zero
    blocks and by [0 | -R^T | I].
    """
    msg = _message(spec, msg)
    ctx = spec.ctx
    c, s = spec.c, spec.s
    m = spec.n - c
    out = np.zeros((spec.n - spec.k, spec.n), dtype=np.int64)
    if msg.is_special:
        out[:, c:c + spec.n - spec.k] = np.eye(spec.n - spec.k, dtype=np.int64)
        return MatrixFq._wrap(ctx, out)
    lead = (msg.family - 1) * s
    width = m - msg.family * s
    out[:lead, c:c + lead] = np.eye(lead, dtype=np.int64)
    tail_block = stripped_generator(spec, msg).array[:, lead + s:]  # R, s x width
    out[lead:, c + lead:c + lead + s] = ctx.plain(-ctx.array(tail_block.T))
    out[lead:, c + lead + s:] = np.eye(width, dtype=np.int64)
    return MatrixFq._wrap(ctx, out)


def dual_codeword(spec, msg):
    return Subspace(dual_generator_matrix(spec, msg))


def enumerate_dual_code(spec, budget=None):
    check_budget(spec, budget)
    return SubspaceCode(dual_codeword(spec, index) for index in range(spec.cardinality))
