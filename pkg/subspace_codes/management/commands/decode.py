from django.core.management.base import CommandError

from subspace_codes.decoding import decode
from subspace_codes.management.base import EXIT_UNDECODABLE, SubspaceCommand
from subspace_codes.serializers import outcome_to_dict, subspace_from_dict


class Command(SubspaceCommand):
    help = 'Decode a received subspace (JSON {"n", "basis"}) to the nearest sunflower codeword.'
    command_name = 'decode'
    decoder = staticmethod(decode)

    def add_arguments(self, parser):
        self.add_spec_arguments(parser, required=False)
        self.add_spec_file_argument(parser)
        self.add_input_argument(parser, help_text='Received subspace JSON file, or - for stdin.')

    def run(self, **options):
        spec = self.build_spec(options)
        document = self.read_json(options['input_path'])
        # accept the envelope printed by the channel command as well
        document = document.get('payload', document)
        received = subspace_from_dict(spec.ctx, document.get('received', document))
        outcome = self.decoder(spec, received)
        self.emit(outcome_to_dict(outcome))
        if not outcome.decoded:
            raise CommandError('Undecodable: no codeword within distance k-c', returncode=EXIT_UNDECODABLE)
