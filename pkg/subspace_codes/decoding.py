"""
Minimum-distance decoding of sunflower codes and of their orthogonals.

decode() reduces a received space X to the stripped coordinates (drop the
first c rows and columns of RRE(X)) and runs the partial-spread kernel there.
The kernel walks the projective points of the reduced space W; any point of W
lying in the sent stripped word determines that word by division in F_q[P]
and F_q[P'].
"""
import enum
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import algebra_div
from .conf import get_setting
from .exceptions import BudgetExceededError, DimensionMismatchError, ParameterError
from .fields import base_digits
from .grassmann import Subspace, distance, orthogonal
from .linalg import MatrixFq, matmul_arrays
from .sunflower import (
    codeword, dual_codeword, index_to_message, message_to_index, stripped_generator,
)

logger = logging.getLogger(__name__)


class DecodeStatus(enum.Enum):
    DECODED = 'Decoded'
    UNDECODABLE = 'Undecodable'


@dataclass
class DecodeOutcome:
    status: DecodeStatus
    message: object = None
    word: Subspace = None
    distance: int = None
    candidates: int = 0

    @property
    def decoded(self):
        return self.status is DecodeStatus.DECODED

    @property
    def index(self):
        return self.message.value if self.message is not None else None


UNDECODABLE = DecodeStatus.UNDECODABLE


def _check_received(spec, x):
    if x.n != spec.n:
        raise DimensionMismatchError(f'received space lives in F_q^{x.n}, code in F_q^{spec.n}')
    spec.ctx.check(x.ctx)


def reduce_received(spec, x):
    """
    Rows c.. and columns c.. of RRE(X), or None when dim X <= c.

    Rows below the c-th have their pivots right of column c, so the dropped
    lower-left block is zero.
    """
    _check_received(spec, x)
    t = x.dim
    if not 1 <= t <= spec.k:
        raise ParameterError(f'dim X must satisfy 1 <= t <= k = {spec.k}, got {t}')
    c = spec.c
    if t <= c:
        return None
    rows = x.basis.array
    if rows[c:, :c].any():
        raise AssertionError('RRE rows below the c-th must vanish on the first c columns')
    return MatrixFq._wrap(spec.ctx, rows[c:, c:])


def projective_points(w):
    """Vectors of W with first nonzero coefficient 1, by increasing coefficient encoding."""
    ctx = w.ctx
    for code in range(1, ctx.q ** w.dim):
        coeffs = base_digits(code, ctx.q, w.dim)
        first = next(c for c in coeffs if c)
        if first != 1:
            continue
        yield matmul_arrays(ctx, np.array([coeffs], dtype=np.int64), w.basis.array)[0]


class SpreadMatch(NamedTuple):
    message: object
    word: Subspace
    distance: int
    candidates: int


def _candidate(spec, vector):
    """Message index of the only stripped codeword that could contain vector, or None."""
    for j in range(1, spec.h + 1):
        block = vector[spec.block_slice(j)]
        if block.any():
            break
    if j == spec.h:
        return 0 if not block[:spec.r].any() else None
    u = block
    blocks = [algebra_div(vector[spec.block_slice(l)], u, spec.p) for l in range(j + 1, spec.h)]
    shifted = np.concatenate([np.zeros(spec.r, dtype=np.int64), u])
    tail = algebra_div(vector[spec.block_slice(spec.h)], shifted, spec.p_prime)
    return message_to_index(spec, j, blocks, tail)


def decode_partial_spread(spec, w):
    """
    The stripped codeword U with d(U, W) < k - c, or None.

    At most (q^t' - 1)/(q - 1) candidates are examined, t' = dim W.
    """
    if w.n != spec.n - spec.c:
        raise DimensionMismatchError(f'W must live in F_q^{spec.n - spec.c}, got F_q^{w.n}')
    if not 1 <= w.dim <= spec.s:
        raise ParameterError(f'dim W must satisfy 1 <= t <= k-c = {spec.s}, got {w.dim}')
    tried = set()
    examined = 0
    for vector in projective_points(w):
        examined += 1
        index = _candidate(spec, vector)
        if index is None or index in tried:
            continue
        tried.add(index)
        word = Subspace(stripped_generator(spec, index))
        d = distance(word, w)
        if d < spec.s:
            logger.debug('Partial-spread kernel matched index %s after %s candidates', index, examined)
            return SpreadMatch(index_to_message(spec, index), word, d, examined)
    logger.debug('Partial-spread kernel found no word within radius (%s candidates)', examined)
    return None


def decode(spec, x):
    """The unique codeword V with d(V, X) < k - c, or an Undecodable outcome."""
    x3 = reduce_received(spec, x)
    if x3 is None:
        return DecodeOutcome(UNDECODABLE)
    match = decode_partial_spread(spec, Subspace(x3))
    if match is None:
        return DecodeOutcome(UNDECODABLE)
    word = codeword(spec, match.message)
    d = distance(word, x)
    if d >= spec.s:
        return DecodeOutcome(UNDECODABLE, candidates=match.candidates)
    return DecodeOutcome(DecodeStatus.DECODED, match.message, word, d, match.candidates)


def decode_dual(spec, x):
    """Decode in the orthogonal code: X decodes to V^perp iff X^perp decodes to V."""
    _check_received(spec, x)
    if not spec.n - spec.k <= x.dim <= spec.n - 1:
        raise ParameterError(f'dim X must satisfy n-k <= t <= n-1, got {x.dim}')
    outcome = decode(spec, orthogonal(x))
    if not outcome.decoded:
        return outcome
    word = dual_codeword(spec, outcome.message)
    if get_setting('STRICT_CHECKS') and distance(word, x) != outcome.distance:
        raise AssertionError('orthogonal complements must preserve distance')
    return DecodeOutcome(DecodeStatus.DECODED, outcome.message, word, outcome.distance, outcome.candidates)


class NearestWord(NamedTuple):
    word: Subspace
    distance: int
    unique: bool


def oracle_nearest(code, x, budget=None):
    """Brute-force nearest codeword by full scan."""
    if budget is None:
        budget = get_setting('ORACLE_BUDGET')
    if len(code) > budget:
        raise BudgetExceededError('nearest-word scan', len(code), budget)
    distances = [distance(word, x) for word in code.words]
    best = min(distances)
    position = distances.index(best)
    return NearestWord(code.words[position], best, distances.count(best) == 1)
