from django.core.management.base import CommandError

from subspace_codes.decoding import decode
from subspace_codes.grassmann import distance
from subspace_codes.management.base import EXIT_UNDECODABLE, SubspaceCommand
from subspace_codes.management.commands.channel import add_channel_arguments, send


class Command(SubspaceCommand):
    help = 'Encode, transmit and decode one message; report whether the sent codeword came back.'
    command_name = 'roundtrip'

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        add_channel_arguments(parser)

    def run(self, **options):
        spec = self.build_spec(options)
        message, sent, received = send(spec, options)
        outcome = decode(spec, received)
        success = outcome.decoded and outcome.word == sent
        self.emit({
            'index': message.value,
            'decoded_index': outcome.index,
            'status': outcome.status.value,
            'distance': distance(sent, received),
            'success': success,
        })
        if not outcome.decoded:
            raise CommandError('Undecodable: no codeword within distance k-c', returncode=EXIT_UNDECODABLE)
