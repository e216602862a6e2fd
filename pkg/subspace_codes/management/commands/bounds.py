from subspace_codes.analysis import bounds_ledger, klein_set_gap
from subspace_codes.management.base import SubspaceCommand
from subspace_codes.serializers import ledger_to_dict


class Command(SubspaceCommand):
    help = 'Print the exact bounds ledger for equidistant codes with parameters (q, k, n, c).'
    command_name = 'bounds'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--c', type=int, required=True)

    def run(self, **options):
        q, k, n, c = options['q'], options['k'], options['n'], options['c']
        payload = ledger_to_dict(bounds_ledger(q, k, n, c))
        if (k, n, c) == (3, 6, 1):
            payload['klein_set_gap'] = klein_set_gap(q)
        self.emit(payload)
