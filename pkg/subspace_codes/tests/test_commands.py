import json
import os
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

GOLDEN = Path(__file__).resolve().parent / 'golden'
CODE_ARGS = ['--q', '2', '--k', '3', '--n', '6', '--c', '1']


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return json.loads(out.getvalue())


class CommandTestCase(SimpleTestCase):
    def write_json(self, document):
        handle = tempfile.NamedTemporaryFile('w', suffix='.json', delete=False, encoding='utf-8')
        with handle:
            json.dump(document, handle)
        self.addCleanup(os.remove, handle.name)
        return handle.name

    def assertExitCode(self, code, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command(*args, stdout=out)
        self.assertEqual(ctx.exception.returncode, code)
        return out.getvalue()


class BoundsCommandTest(CommandTestCase):
    def test_golden_ledger(self):
        envelope = run('bounds', *CODE_ARGS)
        self.assertEqual(envelope['command'], 'bounds')
        self.assertEqual(envelope['version'], '1')
        with open(GOLDEN / 'bounds_2_3_6_1.json', encoding='utf-8') as handle:
            self.assertEqual(envelope['payload'], json.load(handle))

    def test_invalid_parameters(self):
        self.assertExitCode(4, 'bounds', '--q', '2', '--k', '3', '--n', '6', '--c', '3')


class ConstructCommandTest(CommandTestCase):
    def test_construct(self):
        payload = run('construct', *CODE_ARGS, '--words')['payload']
        self.assertEqual(payload['cardinality'], 9)
        self.assertEqual(payload['formula_cardinality'], 9)
        self.assertEqual(payload['p'], [1, 1, 1])
        self.assertEqual(payload['p_prime'], [1, 1, 0, 1])
        self.assertEqual(payload['companion_p']['entries'], [[0, 1], [1, 1]])
        self.assertEqual(payload['companion_p_prime']['entries'], [[0, 1, 0], [0, 0, 1], [1, 1, 0]])
        self.assertEqual(len(payload['words']), 9)

    def test_not_a_prime_power(self):
        self.assertExitCode(4, 'construct', '--q', '6', '--k', '2', '--n', '4', '--c', '0')

    def test_reducible_polynomial(self):
        self.assertExitCode(4, 'construct', *CODE_ARGS, '--p', '1,0,1')

    def test_budget(self):
        self.assertExitCode(5, 'construct', *CODE_ARGS, '--words', '--budget', '3')


class EncodeCommandTest(CommandTestCase):
    def test_last_message(self):
        payload = run('encode', *CODE_ARGS, '--index', '8')['payload']
        self.assertEqual(payload['message'], {'index': 8, 'family': 1, 'blocks': [], 'tail': 7})
        self.assertEqual(payload['generator']['rows'], 3)
        self.assertEqual(payload['dual_generator']['rows'], 3)

    def test_special_message(self):
        payload = run('encode', *CODE_ARGS, '--index', '0')['payload']
        self.assertEqual(payload['message'], {'index': 0, 'word': 'SPECIAL'})
        self.assertEqual(payload['subspace']['basis']['entries'],
                         [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]])


class ChannelAndDecodeCommandTest(CommandTestCase):
    def test_roundtrip(self):
        payload = run('roundtrip', *CODE_ARGS, '--p-prime', '1,1,0,1', '--index', '4',
                      '--rho', '1', '--eps', '0', '--seed', '7')['payload']
        self.assertTrue(payload['success'])
        self.assertEqual(payload['distance'], 1)
        self.assertEqual(payload['decoded_index'], 4)

    def test_channel_output_feeds_decode(self):
        envelope = run('channel', *CODE_ARGS, '--index', '6', '--rho', '1', '--seed', '3', '--mixing', '--packets')
        self.assertEqual(envelope['payload']['distance'], 1)
        self.assertEqual(envelope['payload']['packets']['rows'], 2)
        path = self.write_json(envelope)
        payload = run('decode', *CODE_ARGS, '--in', path)['payload']
        self.assertEqual(payload['status'], 'Decoded')
        self.assertEqual(payload['index'], 6)
        self.assertEqual(payload['distance'], 1)

    def test_undecodable(self):
        path = self.write_json({'n': 6, 'basis': {'rows': 1, 'cols': 6, 'entries': [[1, 0, 0, 0, 0, 0]]}})
        output = self.assertExitCode(3, 'decode', *CODE_ARGS, '--in', path)
        self.assertEqual(json.loads(output)['payload']['status'], 'Undecodable')

    def test_decode_dual(self):
        encoded = run('encode', *CODE_ARGS, '--index', '5')['payload']
        received = {'n': 6, 'basis': encoded['dual_generator']}
        payload = run('decode_dual', *CODE_ARGS, '--in', self.write_json(received))['payload']
        self.assertEqual(payload['status'], 'Decoded')
        self.assertEqual(payload['index'], 5)
        self.assertEqual(payload['distance'], 0)

    def test_construct_output_as_spec(self):
        spec_path = self.write_json(run('construct', '--q', '3', '--k', '2', '--n', '6', '--c', '0'))
        encoded = run('encode', '--q', '3', '--k', '2', '--n', '6', '--c', '0', '--index', '40')['payload']
        received = self.write_json({'n': 6, 'basis': encoded['generator']})
        payload = run('decode', '--spec', spec_path, '--in', received)['payload']
        self.assertEqual(payload['status'], 'Decoded')
        self.assertEqual(payload['index'], 40)
        dual = self.write_json({'n': 6, 'basis': encoded['dual_generator']})
        self.assertEqual(run('decode_dual', '--spec', spec_path, '--in', dual)['payload']['index'], 40)

    def test_spec_or_parameters_required(self):
        path = self.write_json({'n': 6, 'basis': {'rows': 1, 'cols': 6, 'entries': [[1, 0, 0, 0, 0, 0]]}})
        self.assertExitCode(4, 'decode', '--q', '2', '--k', '3', '--in', path)
        self.assertExitCode(4, 'decode', '--spec', self.write_json({'k': 3}), '--in', path)

    def test_unreadable_input(self):
        self.assertExitCode(4, 'decode', *CODE_ARGS, '--in', '/nonexistent/received.json')


class AnalyzeCommandTest(CommandTestCase):
    def test_sunflower_code(self):
        payload = run('analyze', *CODE_ARGS)['payload']
        self.assertTrue(payload['profile']['is_sunflower'])
        self.assertEqual(payload['profile']['c'], 1)
        self.assertEqual(payload['profile']['cardinality'], 9)
        self.assertTrue(all(payload['sunflower_criteria'].values()))
        self.assertTrue(payload['classification']['all_passed'])
        self.assertEqual(payload['bounds']['deza_threshold'], 43)

    def test_orthogonal(self):
        payload = run('analyze', *CODE_ARGS, '--orthogonal')['payload']
        self.assertFalse(payload['profile']['is_sunflower'])
        self.assertTrue(payload['classification']['orthogonal_is_sunflower'])

    def test_code_from_file(self):
        words = [
            {'n': 4, 'basis': {'rows': 2, 'cols': 4, 'entries': rows}}
            for rows in ([[1, 0, 0, 0], [0, 1, 0, 0]], [[1, 0, 0, 0], [0, 0, 1, 0]], [[0, 1, 0, 0], [0, 0, 1, 0]])
        ]
        path = self.write_json({'field': {'p': 2, 'm': 1}, 'words': words})
        payload = run('analyze', '--in', path)['payload']
        self.assertTrue(payload['profile']['is_equidistant'])
        self.assertEqual(payload['profile']['t_centers'], 3)
        self.assertFalse(payload['profile']['is_sunflower'])

    def test_needs_a_code(self):
        self.assertExitCode(4, 'analyze', '--q', '2')
