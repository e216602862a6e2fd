from search_lab.models import CertificateRecord
from subspace_codes.management.base import SubspaceCommand


class Command(SubspaceCommand):
    help = 'List stored search certificates, newest first.'
    command_name = 'certificates'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, default=None)
        parser.add_argument('--k', type=int, default=None)
        parser.add_argument('--n', type=int, default=None)
        parser.add_argument('--c', type=int, default=None)
        parser.add_argument('--limit', type=int, default=20)

    def run(self, **options):
        records = CertificateRecord.objects.all()
        for name in ('q', 'k', 'n', 'c'):
            if options[name] is not None:
                records = records.filter(**{name: options[name]})
        self.emit({'certificates': [record.to_payload() for record in records[:options['limit']]]})
