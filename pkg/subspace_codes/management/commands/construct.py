from subspace_codes.management.base import SubspaceCommand
from subspace_codes.serializers import matrix_to_dict, spec_to_dict, subspace_to_dict
from subspace_codes.sunflower import check_budget, codeword, generator_matrix


class Command(SubspaceCommand):
    help = 'Build a sunflower code F_q(k,n,c,p,p\') and print its parameters, optionally with every codeword.'
    command_name = 'construct'

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        parser.add_argument(
            '--words',
            action='store_true',
            help='Also list every codeword (bounded by --budget).',
        )
        parser.add_argument('--budget', type=int, default=None, help='Largest code to list.')

    def run(self, **options):
        spec = self.build_spec(options)
        payload = spec_to_dict(spec)
        payload.update({
            'formula_cardinality': spec.formula_cardinality,
            'companion_p': matrix_to_dict(spec.companion),
            'companion_p_prime': matrix_to_dict(spec.tail_companion),
            'center': subspace_to_dict(spec.center),
        })
        if options['words']:
            check_budget(spec, options['budget'])
            payload['words'] = [
                {
                    'index': index,
                    'generator': matrix_to_dict(generator_matrix(spec, index)),
                    'subspace': subspace_to_dict(codeword(spec, index)),
                }
                for index in range(spec.cardinality)
            ]
        self.emit(payload)
