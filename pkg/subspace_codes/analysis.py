"""
Code-level analysis: equidistance, centers and petals, the sunflower
criteria, the bounds ledger, and instance checks of the classification
results for equidistant codes.

All bounds are exact: integers, or fractions.Fraction where a power q^(c-1)
with c = 0 makes a coefficient rational.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .conf import get_setting
from .exceptions import DimensionMismatchError, ParameterError
from .fields import prime_power_decomposition
from .grassmann import (
    Subspace, enumerate_grassmannian, gaussian_binomial, orthogonal, span,
)
from .linalg import MatrixFq, matmul_arrays, rank_of_stack

logger = logging.getLogger(__name__)


class SubspaceCode:
    """
    A constant-dimension code: at least two distinct k-dimensional subspaces
    of F_q^n. Words are kept sorted by Subspace.sort_key.
    """

    def __init__(self, words):
        unique = sorted(set(words), key=lambda w: w.sort_key)
        if len(unique) < 2:
            raise ParameterError(f'a code must satisfy |C| >= 2, got {len(unique)} distinct words')
        first = unique[0]
        for word in unique[1:]:
            first.ctx.check(word.ctx)
            if word.n != first.n:
                raise DimensionMismatchError(f'words live in F_q^{first.n} and F_q^{word.n}')
            if word.dim != first.dim:
                raise DimensionMismatchError(f'words have dimensions {first.dim} and {word.dim}')
        self.words = tuple(unique)
        self.n = first.n
        self.k = first.dim

    @property
    def ctx(self):
        return self.words[0].ctx

    @property
    def q(self):
        return self.ctx.q

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word):
        return word in self._word_set

    def __repr__(self):
        return f'SubspaceCode(q={self.q}, k={self.k}, n={self.n}, size={len(self)})'

    @cached_property
    def _word_set(self):
        return frozenset(self.words)

    @cached_property
    def duals(self):
        return tuple(orthogonal(w) for w in self.words)

    def pairs(self):
        return itertools.combinations(range(len(self.words)), 2)

    @cached_property
    def intersection_dims(self):
        """dim(U & V) for every pair of word indices i < j."""
        k = self.k
        return {(i, j): 2 * k - rank_of_stack([self.words[i].basis, self.words[j].basis])
                for i, j in self.pairs()}

    def intersection(self, i, j):
        # dual of A + B is the intersection; the word duals are cached
        return orthogonal(span([self.duals[i], self.duals[j]]))

    @cached_property
    def pairwise_intersections(self):
        return {(i, j): self.intersection(i, j) for i, j in self.pairs()}

    @cached_property
    def centers(self):
        """T(C): the set of pairwise intersections."""
        return frozenset(self.pairwise_intersections.values())

    @cached_property
    def span(self):
        return span(self.words)


@dataclass
class CodeProfile:
    q: int
    k: int
    n: int
    cardinality: int
    min_distance: int
    is_equidistant: bool
    c: int = None
    is_sunflower: bool = False
    center: Subspace = None
    span_dim: int = 0
    t_centers: int = 0
    centers: list = field(default_factory=list)


def profile(code):
    """Exact pairwise scan of the code; centers are collected only when it is equidistant."""
    dims = code.intersection_dims
    max_dim = max(dims.values())
    min_distance = 2 * (code.k - max_dim)
    equidistant = min(dims.values()) == max_dim
    result = CodeProfile(
        q=code.q, k=code.k, n=code.n, cardinality=len(code),
        min_distance=min_distance, is_equidistant=equidistant,
        span_dim=code.span.dim,
    )
    if not equidistant:
        logger.debug('%r is not equidistant (intersection dims %s..%s)', code, min(dims.values()), max_dim)
        return result
    result.c = max_dim
    centers = sorted(code.centers, key=lambda s: s.sort_key)
    result.centers = centers
    result.t_centers = len(centers)
    result.is_sunflower = len(centers) == 1
    if result.is_sunflower:
        result.center = centers[0]
    if get_setting('STRICT_CHECKS'):
        criteria = sunflower_criteria(code)
        if len({criteria.single_center, criteria.dual_span_dimension, criteria.dual_span_is_pair_sum}) != 1:
            raise AssertionError(f'sunflower criteria disagree for {code!r}: {criteria}')
    return result


@dataclass(frozen=True)
class SunflowerCriteria:
    single_center: bool
    dual_span_dimension: bool
    dual_span_is_pair_sum: bool


def sunflower_criteria(code):
    """
    The three equivalent characterisations of a sunflower among equidistant
    codes, each computed on its own.
    """
    dims = set(code.intersection_dims.values())
    if len(dims) != 1:
        raise ParameterError('sunflower criteria need an equidistant code')
    c = dims.pop()
    dual_span = span(code.duals)
    pair_sum = all(span([code.duals[i], code.duals[j]]) == dual_span for i, j in code.pairs())
    return SunflowerCriteria(
        single_center=len(code.centers) == 1,
        dual_span_dimension=dual_span.dim == code.n - c,
        dual_span_is_pair_sum=pair_sum,
    )


def petals(code, center):
    """P(A): the words containing the center A."""
    if center not in code.centers:
        raise ParameterError('A must be a center of C')
    return [w for w in code.words if w.contains_subspace(center)]


def orthogonal_code(code):
    return SubspaceCode(code.duals)


def strip_center(code, center=None):
    """
    The partial spread {U/A} in F_q^(n-c) for a sunflower with center A.

    A vector is mapped to F_q^n / A by reducing it against the RRE basis of A
    and deleting the pivot columns of A.
    """
    if center is None:
        centers = code.centers
        if len(centers) != 1:
            raise ParameterError('only a sunflower has a single center to strip')
        (center,) = centers
    keep = [j for j in range(code.n) if j not in set(center.pivots)]
    stripped = []
    for word in code.words:
        rows = [center.reduce(row)[keep] for row in word.basis.array]
        stripped.append(Subspace(MatrixFq(code.ctx, np.array(rows).reshape(len(rows), len(keep)))))
    return SubspaceCode(stripped)


def ball_code(ctx, k, n, ambient=None):
    """
    All k-dimensional subspaces of a fixed (k+1)-dimensional space, by default
    the span of the first k+1 unit vectors. A (k-1)-intersecting code of
    cardinality [k+1 choose k]_q whose orthogonal is a sunflower.
    """
    if not 1 <= k <= n - 1:
        raise ParameterError(f'k must satisfy 1 <= k <= n-1, got k={k}, n={n}')
    if ambient is None:
        ambient = Subspace.coordinate(ctx, n, range(k + 1))
    if ambient.dim != k + 1 or ambient.n != n:
        raise DimensionMismatchError(f'the ambient space must have dimension {k + 1} in F_q^{n}')
    words = []
    for local in enumerate_grassmannian(ctx, k, k + 1):
        coords = matmul_arrays(ctx, local.basis.array, ambient.basis.array)
        words.append(Subspace(MatrixFq._wrap(ctx, coords)))
    return SubspaceCode(words)


# -- bounds ------------------------------------------------------------------


def validate_parameters(q, k, n, c):
    """Raise ParameterError naming the first violated inequality."""
    prime_power_decomposition(q)
    if not 1 <= k < n:
        raise ParameterError(f'k must satisfy 1 <= k < n, got k={k}, n={n}')
    if not max(0, 2 * k - n) <= c <= k - 1:
        raise ParameterError(f'c must satisfy max(0,2k-n) <= c <= k-1, got c={c}')


def partial_spread_bounds(q, k, n):
    """Lower and upper bounds on e_q(k, n, 0), with r = n mod k."""
    r = n % k
    upper = (q ** n - q ** r) // (q ** k - 1)
    return upper - q ** r + 1, upper


def deza_threshold(q, k, c):
    """Equidistant codes larger than this are sunflowers; the lines of a plane of order 2 attain it."""
    s = (q ** k - q ** c) // (q - 1)
    return s * s + s + 1


def center_count_coefficient(q, k, c):
    low = Fraction(q) ** (c - 1)
    return (q ** c - low) / (q ** k - low)


def is_spread(q, k, n, c, size):
    return c == 0 and n % k == 0 and size == (q ** n - 1) // (q ** k - 1)


def regime(k, n, c):
    """Names of the classification hypothesis rows met by (k, n, c)."""
    rows = []
    if c in (0, k - 1, 2 * k - n):
        rows.append('c_in_0_km1_2kmn')
    if 2 * n <= 3 * k + 1:
        rows.append('n_le_(3k+1)/2')
    if n >= 3 * k + 1:
        rows.append('n_ge_3k+1')
    return rows


@dataclass
class BoundsLedger:
    parameters: tuple
    reduced_parameters: tuple
    remainder: int
    partial_spread_lower: int
    partial_spread_upper: int
    construction_cardinality: int
    construction_gap_bound: int
    sunflower_lower_bound: int
    deza_threshold: int
    deza_forces_sunflower: bool
    extremal_cap: int
    center_count_coefficient: Fraction
    center_count_lower_bound: int
    dual_parameters: tuple
    full_span_threshold: int
    regime: list


def bounds_ledger(q, k, n, c):
    validate_parameters(q, k, n, c)
    kr, nr = k - c, n - c
    lower, upper = partial_spread_bounds(q, kr, nr)
    r = nr % kr
    coefficient = center_count_coefficient(q, k, c)
    threshold = deza_threshold(q, k, c)
    return BoundsLedger(
        parameters=(q, k, n, c),
        reduced_parameters=(kr, nr),
        remainder=r,
        partial_spread_lower=lower,
        partial_spread_upper=upper,
        construction_cardinality=lower,
        construction_gap_bound=q ** r - 1,
        sunflower_lower_bound=lower,
        deza_threshold=threshold,
        deza_forces_sunflower=lower > threshold,
        extremal_cap=gaussian_binomial(k + 1, k, q),
        center_count_coefficient=coefficient,
        center_count_lower_bound=math.ceil(lower * coefficient),
        dual_parameters=(n - k, n, n - 2 * k + c),
        full_span_threshold=lower,
        regime=regime(k, n, c),
    )


def klein_set_gap(q):
    """
    The hyperbolic Klein set in G_q(3,6) has q^3+q^2+q+1 words while a
    1-intersecting sunflower there has at most q^3+q, so e_q(3,6,1) > e_q(2,5,0).
    """
    klein = q ** 3 + q ** 2 + q + 1
    _, sunflower_cap = partial_spread_bounds(q, 2, 5)
    return {'q': q, 'klein_cardinality': klein, 'sunflower_upper_bound': sunflower_cap,
            'holds': klein > sunflower_cap}


# -- classification predicates ----------------------------------------------


@dataclass
class PredicateCheck:
    name: str
    applicable: bool
    passed: bool = True
    detail: str = ''


@dataclass
class ClassificationReport:
    equidistant: bool
    c: int = None
    is_sunflower: bool = False
    orthogonal_is_sunflower: bool = False
    checks: list = field(default_factory=list)

    @property
    def all_passed(self):
        return all(check.passed for check in self.checks if check.applicable)

    def failures(self):
        return [check.name for check in self.checks if check.applicable and not check.passed]


def check_classification_predicates(code, optimal=False):
    """
    Evaluate on this code every classification implication whose hypotheses
    it meets. Pass optimal=True only for a code known to attain e_q(k,n,c).
    """
    prof = profile(code)
    if not prof.is_equidistant:
        return ClassificationReport(equidistant=False)
    q, k, n, c = code.q, code.k, code.n, prof.c
    size = len(code)
    dual_prof = profile(orthogonal_code(code))
    ledger = bounds_ledger(q, k, n, c)
    sunflower = prof.is_sunflower
    dual_sunflower = dual_prof.is_sunflower
    report = ClassificationReport(equidistant=True, c=c, is_sunflower=sunflower,
                                  orthogonal_is_sunflower=dual_sunflower)
    checks = report.checks

    check = PredicateCheck('extremal_classification', applicable=c == k - 1)
    if check.applicable:
        check.passed = (sunflower or dual_sunflower) and (sunflower or prof.span_dim == k + 1)
        check.detail = f'span dimension {prof.span_dim}'
    checks.append(check)

    check = PredicateCheck('orthogonal_not_sunflower',
                           applicable=sunflower and prof.span_dim == n and n > 2 * k - c)
    if check.applicable:
        check.passed = not dual_sunflower
    checks.append(check)

    check = PredicateCheck('full_span', applicable=sunflower and size >= ledger.full_span_threshold)
    if check.applicable:
        check.passed = prof.span_dim == n
        check.detail = f'span dimension {prof.span_dim} of {n}'
    checks.append(check)

    check = PredicateCheck('deza_sunflower', applicable=size > ledger.deza_threshold)
    if check.applicable:
        check.passed = sunflower
    checks.append(check)

    bound = math.ceil(size * ledger.center_count_coefficient)
    check = PredicateCheck('center_count', applicable=not sunflower)
    if check.applicable:
        check.passed = prof.t_centers >= bound
        check.detail = f't(C) = {prof.t_centers}, bound {bound}'
    checks.append(check)

    check = PredicateCheck('center_count_estimate', applicable=optimal and not sunflower)
    if check.applicable:
        check.passed = prof.t_centers >= ledger.center_count_lower_bound
        check.detail = f't(C) = {prof.t_centers}, bound {ledger.center_count_lower_bound}'
    checks.append(check)

    check = PredicateCheck('both_sunflowers_iff_spreads', applicable=optimal)
    if check.applicable:
        both_spreads = (n == 2 * k and is_spread(q, k, n, c, size)
                        and is_spread(q, n - k, n, dual_prof.c, size))
        check.passed = (sunflower and dual_sunflower) == both_spreads
    checks.append(check)

    for failed in report.failures():
        logger.warning('Classification check %s failed for %r', failed, code)
    return report
