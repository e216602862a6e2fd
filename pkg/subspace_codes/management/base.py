"""
Shared plumbing for the subspace code management commands.

Every command writes exactly one JSON envelope to stdout:

    {"command": <name>, "version": <schema version>, "payload": {...}}

Errors become CommandError with a distinct return code.
"""
import argparse
import json
import sys

from django.core.management.base import BaseCommand, CommandError

from subspace_codes.conf import get_setting
from subspace_codes.exceptions import BudgetExceededError, SubspaceCodeError
from subspace_codes.serializers import dumps, spec_from_dict
from subspace_codes.sunflower import SunflowerCodeSpec

EXIT_UNDECODABLE = 3
EXIT_INVALID = 4
EXIT_BUDGET = 5


def coefficient_list(value):
    """argparse type for little-endian coefficient lists such as 1,1,0,1."""
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated integers, got {value!r}')


class SubspaceCommand(BaseCommand):
    requires_system_checks = []
    command_name = None

    def add_spec_arguments(self, parser, required=True):
        parser.add_argument('--q', type=int, required=required, help='Field size (a prime power).')
        parser.add_argument('--k', type=int, required=required, help='Codeword dimension.')
        parser.add_argument('--n', type=int, required=required, help='Ambient dimension.')
        parser.add_argument('--c', type=int, required=required, help='Center dimension.')
        parser.add_argument(
            '--p',
            type=coefficient_list,
            default=None,
            help='Degree k-c polynomial, coefficients constant term first (default: smallest irreducible).',
        )
        parser.add_argument(
            '--p-prime',
            type=coefficient_list,
            default=None,
            help='Degree k-c+r polynomial, coefficients constant term first (default: smallest irreducible).',
        )

    def add_input_argument(self, parser, required=True, help_text='JSON input file, or - for stdin.'):
        parser.add_argument('--in', dest='input_path', required=required, default=None, help=help_text)

    def add_spec_file_argument(self, parser):
        parser.add_argument(
            '--spec',
            dest='spec_path',
            default=None,
            help='Code parameters as JSON, e.g. the output of the construct command. Replaces --q/--k/--n/--c.',
        )

    def build_spec(self, options):
        if options.get('spec_path'):
            document = self.read_json(options['spec_path'])
            return spec_from_dict(document.get('payload', document))
        if None in (options.get('q'), options.get('k'), options.get('n'), options.get('c')):
            raise CommandError('Pass --spec, or all of --q, --k, --n and --c.', returncode=EXIT_INVALID)
        return SunflowerCodeSpec.build(options['q'], options['k'], options['n'], options['c'],
                                       options.get('p'), options.get('p_prime'))

    def read_json(self, path):
        try:
            if path == '-':
                return json.load(sys.stdin)
            with open(path, encoding='utf-8') as handle:
                return json.load(handle)
        except OSError as exc:
            raise CommandError(f'Cannot read {path}: {exc}', returncode=EXIT_INVALID)
        except json.JSONDecodeError as exc:
            raise CommandError(f'{path} is not valid JSON: {exc}', returncode=EXIT_INVALID)

    def emit(self, payload):
        envelope = {
            'command': self.command_name,
            'version': get_setting('SCHEMA_VERSION'),
            'payload': payload,
        }
        self.stdout.write(dumps(envelope))

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except BudgetExceededError as exc:
            raise CommandError(str(exc), returncode=EXIT_BUDGET)
        except SubspaceCodeError as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID)

    def run(self, **options):
        raise NotImplementedError('subclasses of SubspaceCommand must provide a run() method')
