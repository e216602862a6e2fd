from fractions import Fraction

from django.test import SimpleTestCase

from subspace_codes.analysis import (
    SubspaceCode, ball_code, bounds_ledger, check_classification_predicates, klein_set_gap,
    orthogonal_code, partial_spread_bounds, petals, profile, regime, sunflower_criteria,
)
from subspace_codes.exceptions import DimensionMismatchError, ParameterError
from subspace_codes.fields import field_for
from subspace_codes.grassmann import Subspace
from subspace_codes.sunflower import SunflowerCodeSpec, enumerate_code


def lines(ctx, *pairs):
    return SubspaceCode(Subspace.coordinate(ctx, 4, pair) for pair in pairs)


class SubspaceCodeTest(SimpleTestCase):
    def test_needs_two_words(self):
        ctx = field_for(2)
        word = Subspace.coordinate(ctx, 4, [0, 1])
        with self.assertRaisesMessage(ParameterError, 'a code must satisfy |C| >= 2'):
            SubspaceCode([word, word])

    def test_mixed_dimensions(self):
        ctx = field_for(2)
        with self.assertRaises(DimensionMismatchError):
            SubspaceCode([Subspace.coordinate(ctx, 4, [0]), Subspace.coordinate(ctx, 4, [1, 2])])

    def test_not_equidistant(self):
        code = lines(field_for(2), (0, 1), (0, 2), (2, 3))
        prof = profile(code)
        self.assertFalse(prof.is_equidistant)
        self.assertEqual(prof.min_distance, 2)
        with self.assertRaises(ParameterError):
            sunflower_criteria(code)
        self.assertFalse(check_classification_predicates(code).equidistant)


class SunflowerProfileTest(SimpleTestCase):
    def setUp(self):
        self.spec = SunflowerCodeSpec.build(2, 3, 6, 1)
        self.code = enumerate_code(self.spec)

    def test_sunflower(self):
        prof = profile(self.code)
        self.assertTrue(prof.is_sunflower)
        self.assertEqual(prof.t_centers, 1)
        self.assertEqual(prof.span_dim, 6)
        self.assertEqual(sunflower_criteria(self.code).__dict__,
                         {'single_center': True, 'dual_span_dimension': True, 'dual_span_is_pair_sum': True})
        self.assertEqual(len(petals(self.code, self.spec.center)), 9)

    def test_orthogonal_is_not_a_sunflower(self):
        dual = orthogonal_code(self.code)
        prof = profile(dual)
        self.assertTrue(prof.is_equidistant)
        self.assertEqual(prof.c, 1)
        self.assertFalse(prof.is_sunflower)
        self.assertGreaterEqual(prof.t_centers, 2)
        covered = set()
        for center in prof.centers:
            flower = petals(dual, center)
            self.assertGreaterEqual(len(flower), 2)
            covered.update(flower)
        self.assertEqual(covered, set(dual.words))
        with self.assertRaisesMessage(ParameterError, 'A must be a center of C'):
            petals(dual, self.spec.center)

    def test_classification_checks_pass(self):
        report = check_classification_predicates(self.code)
        self.assertTrue(report.all_passed)
        applicable = {check.name for check in report.checks if check.applicable}
        self.assertEqual(applicable, {'orthogonal_not_sunflower', 'full_span'})
        dual_report = check_classification_predicates(orthogonal_code(self.code))
        self.assertTrue(dual_report.all_passed)
        self.assertTrue(dual_report.orthogonal_is_sunflower)


class BallCodeTest(SimpleTestCase):
    def test_plane_of_lines(self):
        code = ball_code(field_for(2), 2, 4)
        prof = profile(code)
        self.assertEqual(len(code), 7)
        self.assertEqual(prof.c, 1)
        self.assertFalse(prof.is_sunflower)
        self.assertEqual(prof.t_centers, 7)
        self.assertEqual(prof.span_dim, 3)
        report = check_classification_predicates(code, optimal=True)
        self.assertTrue(report.orthogonal_is_sunflower)
        self.assertTrue(report.all_passed, report.failures())

    def test_plane_of_lines_attains_the_sunflower_threshold(self):
        # seven lines of a plane over F_2: not a sunflower, exactly at the threshold
        self.assertEqual(bounds_ledger(2, 2, 4, 1).deza_threshold, 7)
        names = {c.name for c in check_classification_predicates(ball_code(field_for(2), 2, 4)).checks
                 if c.applicable}
        self.assertNotIn('deza_sunflower', names)


class BoundsTest(SimpleTestCase):
    def test_ledger_2_3_6_1(self):
        ledger = bounds_ledger(2, 3, 6, 1)
        self.assertEqual(ledger.reduced_parameters, (2, 5))
        self.assertEqual(ledger.partial_spread_lower, 9)
        self.assertEqual(ledger.partial_spread_upper, 10)
        self.assertEqual(ledger.construction_cardinality, 9)
        self.assertEqual(ledger.deza_threshold, 43)
        self.assertFalse(ledger.deza_forces_sunflower)
        self.assertEqual(ledger.extremal_cap, 15)
        self.assertEqual(ledger.center_count_coefficient, Fraction(1, 7))
        self.assertEqual(ledger.center_count_lower_bound, 2)
        self.assertEqual(ledger.dual_parameters, (3, 6, 1))
        self.assertEqual(ledger.full_span_threshold, 9)

    def test_rational_coefficient_when_c_is_zero(self):
        self.assertEqual(bounds_ledger(2, 2, 4, 0).center_count_coefficient, Fraction(1, 7))
        self.assertEqual(bounds_ledger(3, 2, 4, 0).center_count_coefficient, Fraction(2, 26))

    def test_partial_spread_bounds(self):
        self.assertEqual(partial_spread_bounds(2, 2, 4), (5, 5))
        self.assertEqual(partial_spread_bounds(2, 2, 5), (9, 10))
        self.assertEqual(partial_spread_bounds(3, 2, 6), (91, 91))

    def test_duality_round_trip(self):
        for q, k, n, c in ((2, 3, 6, 1), (2, 2, 5, 0), (3, 2, 7, 1), (2, 4, 9, 1)):
            dual = bounds_ledger(q, k, n, c).dual_parameters
            self.assertEqual(bounds_ledger(q, *dual).dual_parameters, (k, n, c))

    def test_regime(self):
        self.assertEqual(regime(3, 6, 1), [])
        self.assertEqual(regime(2, 4, 0), ['c_in_0_km1_2kmn'])
        self.assertEqual(regime(3, 5, 1), ['c_in_0_km1_2kmn', 'n_le_(3k+1)/2'])
        self.assertEqual(regime(2, 7, 1), ['c_in_0_km1_2kmn', 'n_ge_3k+1'])

    def test_klein_set_gap(self):
        for q in (2, 3, 4, 5, 7):
            gap = klein_set_gap(q)
            self.assertTrue(gap['holds'])
            self.assertEqual(gap['klein_cardinality'], q ** 3 + q ** 2 + q + 1)
            self.assertEqual(gap['sunflower_upper_bound'], q ** 3 + q)


class SpreadOrthogonalTest(SimpleTestCase):
    def test_centers_of_the_orthogonal_spread(self):
        # the line spread of F_2^6 is the set of points of PG(2,4); the
        # pairwise sums of its lines are the 21 lines of that plane
        spec = SunflowerCodeSpec.build(2, 2, 6, 0)
        dual = orthogonal_code(enumerate_code(spec))
        prof = profile(dual)
        self.assertEqual(len(dual), 21)
        self.assertEqual(prof.c, 2)
        self.assertFalse(prof.is_sunflower)
        self.assertEqual(prof.t_centers, 21)
        for center in prof.centers:
            self.assertEqual(len(petals(dual, center)), 5)
        report = check_classification_predicates(dual)
        center_count = next(check for check in report.checks if check.name == 'center_count')
        self.assertTrue(center_count.passed)
        self.assertEqual(center_count.detail, 't(C) = 21, bound 3')
