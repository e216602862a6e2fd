import json
from io import StringIO

import networkx as nx
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from subspace_codes.analysis import profile
from subspace_codes.exceptions import BudgetExceededError

from .models import CertificateRecord
from .search import (
    EXPLORED_REGION, CliqueSolver, baseline_clique_number, build_graph, certify_classification,
    max_equidistant,
)


class IntersectionGraphTest(SimpleTestCase):
    def test_graph_sizes(self):
        graph = build_graph(2, 2, 4, 0)
        self.assertEqual(len(graph.vertices), 35)
        # each line of PG(3,2) misses 16 others
        self.assertEqual(graph.edge_count, 35 * 16 // 2)

    def test_rank_path_matches_point_sets(self):
        with override_settings(SUBSPACE_CODES={'POINTSET_LIMIT': 1}):
            by_rank = build_graph(2, 2, 4, 1)
        by_points = build_graph(2, 2, 4, 1)
        self.assertEqual(sorted(by_rank.graph.edges), sorted(by_points.graph.edges))


class MaxEquidistantTest(SimpleTestCase):
    def test_known_values(self):
        for params, expected in (((2, 1, 2, 0), 3), ((2, 2, 4, 0), 5), ((2, 2, 4, 1), 7),
                                 ((3, 1, 3, 0), 13)):
            certificate = max_equidistant(*params)
            self.assertTrue(certificate.exact)
            self.assertEqual(certificate.e_value, expected, params)
            prof = profile(certificate.witness)
            self.assertTrue(prof.is_equidistant)
            self.assertEqual(prof.c, params[3])

    def test_solver_matches_baseline(self):
        for params in ((2, 2, 4, 0), (2, 2, 4, 1), (3, 2, 4, 1)):
            graph = build_graph(*params).graph
            size, labels, exact = CliqueSolver(graph).maximum()
            self.assertTrue(exact)
            self.assertEqual(size, baseline_clique_number(graph))

    def test_witness_is_lexicographically_smallest(self):
        graph = build_graph(2, 2, 4, 0).graph
        solver = CliqueSolver(graph)
        size, _, _ = solver.maximum()
        witness = solver.smallest_clique_of_size(size)
        self.assertEqual(len(witness), size)
        for u in witness:
            for v in witness:
                if u != v:
                    self.assertTrue(graph.has_edge(u, v))
        maximum = sorted(sorted(c) for c in nx.find_cliques(graph) if len(c) == size)
        self.assertEqual(witness, maximum[0])

    def test_node_budget_gives_lower_bound(self):
        certificate = max_equidistant(2, 2, 4, 1, node_budget=1)
        self.assertFalse(certificate.exact)
        self.assertEqual(certificate.scope, EXPLORED_REGION)
        self.assertLessEqual(certificate.e_value, 7)

    def test_grassmannian_budget(self):
        with self.assertRaises(BudgetExceededError):
            max_equidistant(2, 3, 6, 1, grassmannian_budget=100)


class CertificationTest(SimpleTestCase):
    def test_certify_small_cases(self):
        for params in ((2, 2, 4, 0), (2, 2, 4, 1), (2, 1, 3, 0)):
            certificate = certify_classification(*params, duality=True)
            failures = [check.name for check in certificate.checks if not check.passed]
            self.assertEqual(failures, [], params)
            self.assertEqual(certificate.scope, 'exhaustive')
            names = {check.name for check in certificate.checks}
            self.assertIn('dichotomy', names)
            self.assertIn('duality', names)

    def test_duality_check_counts(self):
        certificate = certify_classification(2, 2, 4, 1, duality=True)
        duality = next(check for check in certificate.checks if check.name == 'duality')
        self.assertEqual(duality.applicable, 1)
        self.assertTrue(duality.passed)


class SearchCommandTest(TestCase):
    def run_command(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return json.loads(out.getvalue())

    def test_search_and_store(self):
        payload = self.run_command('search', '--q', '2', '--k', '2', '--n', '4', '--c', '0',
                                   '--certify', '--save', '--notes', 'line spread')['payload']
        self.assertEqual(payload['e_value'], 5)
        self.assertTrue(payload['exact'])
        self.assertTrue(payload['all_passed'])
        self.assertEqual(len(payload['witness']['words']), 5)
        record = CertificateRecord.objects.get(pk=payload['record_id'])
        self.assertEqual(record.parameters, [2, 2, 4, 0])
        self.assertEqual(str(record), 'e_2(2,4,0) = 5 (exhaustive)')

        listing = self.run_command('certificates', '--k', '2')['payload']['certificates']
        self.assertEqual(len(listing), 1)
        self.assertEqual(listing[0]['e_value'], 5)
        self.assertEqual(listing[0]['notes'], 'line spread')
        self.assertEqual(self.run_command('certificates', '--k', '3')['payload']['certificates'], [])

    def test_budget_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('search', '--q', '2', '--k', '3', '--n', '6', '--c', '1',
                         '--grassmannian-budget', '100', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 5)

    def test_node_budget_exit_code_after_partial_output(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('search', '--q', '2', '--k', '2', '--n', '4', '--c', '1', '--budget', '1', '--save',
                         stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 5)
        payload = json.loads(out.getvalue())['payload']
        self.assertFalse(payload['exact'])
        self.assertEqual(payload['scope'], 'explored region')
        self.assertLessEqual(payload['e_value'], 7)
        record = CertificateRecord.objects.get(pk=payload['record_id'])
        self.assertFalse(record.exact)
