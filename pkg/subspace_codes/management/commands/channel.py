from subspace_codes.channel import ChannelConfig, received_packets, transmit, transmit_mixing
from subspace_codes.grassmann import distance
from subspace_codes.management.base import SubspaceCommand
from subspace_codes.serializers import matrix_to_dict, subspace_to_dict
from subspace_codes.sunflower import codeword, index_to_message


def add_channel_arguments(parser):
    parser.add_argument('--index', type=int, required=True, help='Message index of the sent codeword.')
    parser.add_argument('--rho', type=int, default=0, help='Erased dimensions.')
    parser.add_argument('--eps', type=int, default=0, help='Error dimensions.')
    parser.add_argument('--seed', type=int, default=0, help='Channel seed.')
    parser.add_argument('--trial', type=int, default=0, help='Trial counter mixed into the seed.')
    parser.add_argument(
        '--mixing',
        action='store_true',
        help='Recombine the packets with a random invertible matrix before reception.',
    )


def channel_config(options):
    return ChannelConfig(rho=options['rho'], eps=options['eps'], seed=options['seed'])


def send(spec, options):
    """(message, sent codeword, received subspace) for the channel options."""
    message = index_to_message(spec, options['index'])
    sent = codeword(spec, message)
    cfg = channel_config(options)
    medium = transmit_mixing if options['mixing'] else transmit
    return message, sent, medium(sent, cfg, index=message.value, trial=options['trial'])


class Command(SubspaceCommand):
    help = 'Send a codeword through the seeded erasure/error channel and print the received subspace.'
    command_name = 'channel'

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        add_channel_arguments(parser)
        parser.add_argument(
            '--packets',
            action='store_true',
            help='Also print the received packet matrix (after recombination).',
        )

    def run(self, **options):
        spec = self.build_spec(options)
        message, sent, received = send(spec, options)
        payload = {
            'index': message.value,
            'rho': options['rho'],
            'eps': options['eps'],
            'seed': options['seed'],
            'trial': options['trial'],
            'sent': subspace_to_dict(sent),
            'received': subspace_to_dict(received),
            'distance': distance(sent, received),
        }
        if options['packets']:
            packets = received_packets(sent, channel_config(options), index=message.value, trial=options['trial'])
            payload['packets'] = matrix_to_dict(packets)
        self.emit(payload)
