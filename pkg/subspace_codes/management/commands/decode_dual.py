from subspace_codes.decoding import decode_dual
from subspace_codes.management.commands.decode import Command as DecodeCommand


class Command(DecodeCommand):
    help = 'Decode a received subspace in the orthogonal of a sunflower code.'
    command_name = 'decode_dual'
    decoder = staticmethod(decode_dual)
