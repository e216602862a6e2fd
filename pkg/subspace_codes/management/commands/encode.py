from subspace_codes.management.base import SubspaceCommand
from subspace_codes.serializers import matrix_to_dict, subspace_to_dict
from subspace_codes.sunflower import (
    codeword, dual_generator_matrix, generator_matrix, index_to_message,
)


class Command(SubspaceCommand):
    help = 'Encode a message index as a codeword generator matrix.'
    command_name = 'encode'

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        parser.add_argument('--index', type=int, required=True, help='Message index in [0, |C|).')

    def run(self, **options):
        spec = self.build_spec(options)
        message = index_to_message(spec, options['index'])
        self.emit({
            'index': message.value,
            'message': message.describe(),
            'generator': matrix_to_dict(generator_matrix(spec, message)),
            'dual_generator': matrix_to_dict(dual_generator_matrix(spec, message)),
            'subspace': subspace_to_dict(codeword(spec, message)),
        })
