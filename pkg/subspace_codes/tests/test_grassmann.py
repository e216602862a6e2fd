import itertools

import numpy as np
from django.test import SimpleTestCase, override_settings

from subspace_codes.exceptions import BudgetExceededError, ParameterError
from subspace_codes.fields import field_for
from subspace_codes.grassmann import (
    Subspace, distance, enumerate_grassmannian, gaussian_binomial, intersect, intersection_dim,
    orthogonal, span, subspace_sum,
)
from subspace_codes.linalg import MatrixFq


def random_subspace(ctx, rng, k, n):
    while True:
        s = Subspace(MatrixFq.random(ctx, rng, k, n))
        if s.dim == k:
            return s


class GaussianBinomialTest(SimpleTestCase):
    def test_values(self):
        self.assertEqual(gaussian_binomial(2, 1, 2), 3)
        self.assertEqual(gaussian_binomial(4, 2, 2), 35)
        self.assertEqual(gaussian_binomial(6, 3, 2), 1395)
        self.assertEqual(gaussian_binomial(4, 2, 3), 130)
        self.assertEqual(gaussian_binomial(5, 0, 7), 1)
        with self.assertRaises(ParameterError):
            gaussian_binomial(3, 4, 2)

    def test_enumeration_counts(self):
        for q, k, n in ((2, 1, 2), (2, 2, 4), (3, 2, 4), (2, 3, 6)):
            words = list(enumerate_grassmannian(q, k, n))
            self.assertEqual(len(words), gaussian_binomial(n, k, q))
            self.assertEqual(len(set(words)), len(words))
            self.assertTrue(all(w.dim == k for w in words))

    def test_enumeration_is_canonical(self):
        for word in enumerate_grassmannian(2, 2, 4):
            self.assertEqual(Subspace(word.basis), word)

    @override_settings(SUBSPACE_CODES={'GRASSMANNIAN_BUDGET': 100})
    def test_budget(self):
        with self.assertRaises(BudgetExceededError) as ctx:
            enumerate_grassmannian(2, 3, 6)
        self.assertEqual(ctx.exception.required, 1395)


class SubspaceOperationsTest(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(99)

    def test_canonical_equality(self):
        ctx = field_for(3)
        a = Subspace.from_rows(ctx, [[1, 0, 2], [0, 1, 1]], 3)
        b = Subspace.from_rows(ctx, [[1, 1, 0], [2, 0, 1]], 3)
        self.assertEqual(a, b)
        self.assertEqual(len({a, b}), 1)

    def test_orthogonal_involution(self):
        for word in enumerate_grassmannian(2, 2, 4):
            dual = orthogonal(word)
            self.assertEqual(dual.dim, 2)
            self.assertEqual(orthogonal(dual), word)

    def test_orthogonal_involution_random(self):
        checked = 0
        for q in (2, 3, 4, 5):
            ctx = field_for(q)
            for _ in range(2500):
                n = int(self.rng.integers(2, 7))
                u = Subspace(MatrixFq.random(ctx, self.rng, int(self.rng.integers(1, n)), n))
                dual = orthogonal(u)
                self.assertEqual(dual.dim, n - u.dim)
                self.assertEqual(orthogonal(dual), u)
                checked += 1
        self.assertGreaterEqual(checked, 10_000)

    def test_metric_axioms(self):
        checked = 0
        for q in (2, 3):
            ctx = field_for(q)
            spaces = [random_subspace(ctx, self.rng, k, 4) for k in (0, 1, 1, 2, 2, 2, 3, 3, 4)] * 2
            spaces += [random_subspace(ctx, self.rng, 2, 4) for _ in range(4)]
            for u, v, w in itertools.product(spaces, repeat=3):
                self.assertEqual(distance(u, v), distance(v, u))
                self.assertLessEqual(distance(u, w), distance(u, v) + distance(v, w))
                self.assertEqual(distance(u, v) == 0, u == v)
                checked += 1
        self.assertGreaterEqual(checked, 10_000)

    def test_dimension_identity(self):
        for q in (2, 4):
            ctx = field_for(q)
            for _ in range(20):
                u = random_subspace(ctx, self.rng, 2, 5)
                v = random_subspace(ctx, self.rng, 3, 5)
                total = subspace_sum(u, v)
                meet = intersect(u, v)
                self.assertEqual(total.dim + meet.dim, u.dim + v.dim)
                self.assertEqual(meet.dim, intersection_dim(u, v))
                self.assertTrue(u.contains_subspace(meet) and v.contains_subspace(meet))
                self.assertEqual(orthogonal(total), intersect(orthogonal(u), orthogonal(v)))

    def test_point_mask_counts_vectors(self):
        ctx = field_for(3)
        u = random_subspace(ctx, self.rng, 2, 4)
        self.assertEqual(u.point_mask().bit_count(), 9)
        self.assertEqual(len({tuple(row) for row in u.vectors().tolist()}), 9)

    def test_span_of_nothing(self):
        ctx = field_for(2)
        self.assertEqual(span([], ctx=ctx, n=3).dim, 0)
        with self.assertRaises(ParameterError):
            span([])
