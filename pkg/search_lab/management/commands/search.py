from django.core.management.base import CommandError

from subspace_codes.management.base import EXIT_BUDGET, SubspaceCommand
from subspace_codes.serializers import code_to_dict

from search_lab.models import CertificateRecord, check_to_dict
from search_lab.search import certify_classification, max_equidistant


class Command(SubspaceCommand):
    help = 'Compute e_q(k,n,c) by exhaustive clique search and optionally certify the classification statements.'
    command_name = 'search'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--c', type=int, required=True)
        parser.add_argument(
            '--budget',
            type=int,
            default=None,
            help='Branch-and-bound node budget (default: CLIQUE_NODE_BUDGET).',
        )
        parser.add_argument(
            '--grassmannian-budget',
            type=int,
            default=None,
            help='Largest Grassmannian the search may enumerate (default: GRASSMANNIAN_BUDGET).',
        )
        parser.add_argument('--certify', action='store_true', help='Check the classification on every maximal clique.')
        parser.add_argument('--duality', action='store_true', help='With --certify, also search the dual parameters.')
        parser.add_argument('--save', action='store_true', help='Store the certificate in the database.')
        parser.add_argument('--notes', default=None, help='Free text stored with --save.')

    def run(self, **options):
        args = (options['q'], options['k'], options['n'], options['c'])
        if options['certify']:
            certificate = certify_classification(*args, node_budget=options['budget'],
                                                 grassmannian_budget=options['grassmannian_budget'],
                                                 duality=options['duality'])
        else:
            certificate = max_equidistant(*args, node_budget=options['budget'],
                                          grassmannian_budget=options['grassmannian_budget'])
        payload = {
            'parameters': list(certificate.parameters),
            'e_value': certificate.e_value,
            'exact': certificate.exact,
            'scope': certificate.scope,
            'witness': code_to_dict(certificate.witness) if certificate.witness is not None else None,
            'checks': [check_to_dict(check) for check in certificate.checks],
            'all_passed': certificate.all_passed,
            'node_budget': certificate.node_budget,
            'nodes_used': certificate.nodes_used,
            'vertex_count': certificate.vertex_count,
            'edge_count': certificate.edge_count,
        }
        if certificate.exact and not certificate.all_passed:
            failed = ', '.join(check.name for check in certificate.checks if not check.passed)
            self.stderr.write(self.style.ERROR(f"Failed checks: {failed}"))
        if options['save']:
            record = CertificateRecord.from_certificate(certificate, notes=options['notes'])
            payload['record_id'] = record.id
            self.stderr.write(self.style.SUCCESS(f"Saved certificate #{record.id}: {record}"))
        self.emit(payload)
        if not certificate.exact:
            raise CommandError(
                f'Node budget of {certificate.node_budget} exhausted; e_value {certificate.e_value} is a lower bound',
                returncode=EXIT_BUDGET,
            )
