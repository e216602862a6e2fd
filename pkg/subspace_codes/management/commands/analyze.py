from django.core.management.base import CommandError

from subspace_codes.analysis import (
    bounds_ledger, check_classification_predicates, orthogonal_code, profile, sunflower_criteria,
)
from subspace_codes.fields import field_for
from subspace_codes.management.base import EXIT_INVALID, SubspaceCommand, coefficient_list
from subspace_codes.serializers import (
    code_from_dict, ledger_to_dict, profile_to_dict, report_to_dict,
)
from subspace_codes.sunflower import enumerate_code


class Command(SubspaceCommand):
    help = (
        'Profile a constant-dimension code: equidistance, centers, sunflower criteria, bounds and '
        'classification checks. Read the code with --in, or build it from --q/--k/--n/--c.'
    )
    command_name = 'analyze'

    def add_arguments(self, parser):
        self.add_input_argument(parser, required=False,
                                help_text='Code JSON {"field"?, "words": [...]}, or - for stdin.')
        parser.add_argument('--q', type=int, default=None)
        parser.add_argument('--k', type=int, default=None)
        parser.add_argument('--n', type=int, default=None)
        parser.add_argument('--c', type=int, default=None)
        parser.add_argument('--p', type=coefficient_list, default=None)
        parser.add_argument('--p-prime', type=coefficient_list, default=None)
        parser.add_argument('--budget', type=int, default=None, help='Largest code to enumerate.')
        parser.add_argument('--orthogonal', action='store_true', help='Analyze the orthogonal code instead.')
        parser.add_argument(
            '--optimal',
            action='store_true',
            help='Declare the code optimal, enabling the checks that assume |C| = e_q(k,n,c).',
        )

    def load_code(self, options):
        if options['input_path']:
            ctx = field_for(options['q']) if options['q'] else None
            document = self.read_json(options['input_path'])
            return code_from_dict(document.get('payload', document), ctx)
        if None in (options['q'], options['k'], options['n'], options['c']):
            raise CommandError('Pass --in, or all of --q, --k, --n and --c.', returncode=EXIT_INVALID)
        spec = self.build_spec(options)
        return enumerate_code(spec, options['budget'])

    def run(self, **options):
        code = self.load_code(options)
        if options['orthogonal']:
            code = orthogonal_code(code)
        prof = profile(code)
        payload = {'profile': profile_to_dict(prof)}
        if prof.is_equidistant:
            payload['bounds'] = ledger_to_dict(bounds_ledger(code.q, code.k, code.n, prof.c))
            criteria = sunflower_criteria(code)
            payload['sunflower_criteria'] = {
                'single_center': criteria.single_center,
                'dual_span_dimension': criteria.dual_span_dimension,
                'dual_span_is_pair_sum': criteria.dual_span_is_pair_sum,
            }
        report = check_classification_predicates(code, optimal=options['optimal'])
        summary = report_to_dict(report)
        payload['classification_checks'] = summary.pop('checks')
        payload['classification'] = summary
        self.emit(payload)
