from django.db import models

from subspace_codes.serializers import code_to_dict


class CertificateRecord(models.Model):
    """
    A stored result of the clique search for e_q(k,n,c), with its witness code
    and the classification checks evaluated on the explored codes.
    """
    SCOPE_CHOICES = [
        ('exhaustive', 'Exhaustive'),
        ('explored region', 'Explored region only'),
    ]

    id = models.AutoField(primary_key=True)
    q = models.PositiveIntegerField()
    k = models.PositiveSmallIntegerField()
    n = models.PositiveSmallIntegerField()
    c = models.PositiveSmallIntegerField()
    e_value = models.PositiveIntegerField(help_text='Exact e_q(k,n,c), or a lower bound when exact is False')
    exact = models.BooleanField(default=True)
    scope = models.CharField(max_length=16, choices=SCOPE_CHOICES, default='exhaustive')
    witness = models.JSONField(null=True, blank=True)
    checks = models.JSONField(default=list)
    node_budget = models.BigIntegerField()
    nodes_used = models.BigIntegerField()
    vertex_count = models.PositiveIntegerField(default=0)
    edge_count = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)
    notes = models.TextField(null=True, blank=True)

    class Meta:
        db_table = 'search_certificates'
        verbose_name = 'Search Certificate'
        verbose_name_plural = 'Search Certificates'
        ordering = ['-created_at', '-id']
        indexes = [models.Index(fields=['q', 'k', 'n', 'c'], name='certificate_parameters_idx')]

    def __str__(self):
        bound = '=' if self.exact else '>='
        return f"e_{self.q}({self.k},{self.n},{self.c}) {bound} {self.e_value} ({self.scope})"

    @property
    def parameters(self):
        return [self.q, self.k, self.n, self.c]

    @classmethod
    def from_certificate(cls, certificate, notes=None):
        q, k, n, c = certificate.parameters
        return cls.objects.create(
            q=q, k=k, n=n, c=c,
            e_value=certificate.e_value,
            exact=certificate.exact,
            scope=certificate.scope,
            witness=code_to_dict(certificate.witness) if certificate.witness is not None else None,
            checks=[check_to_dict(check) for check in certificate.checks],
            node_budget=certificate.node_budget,
            nodes_used=certificate.nodes_used,
            vertex_count=certificate.vertex_count,
            edge_count=certificate.edge_count,
            notes=notes,
        )

    def to_payload(self):
        return {
            'id': self.id,
            'parameters': self.parameters,
            'e_value': self.e_value,
            'exact': self.exact,
            'scope': self.scope,
            'witness': self.witness,
            'checks': self.checks,
            'node_budget': self.node_budget,
            'nodes_used': self.nodes_used,
            'vertex_count': self.vertex_count,
            'edge_count': self.edge_count,
            'created_at': self.created_at,
            'notes': self.notes,
        }


def check_to_dict(check):
    return {'name': check.name, 'applicable': check.applicable, 'pass': check.passed, 'detail': check.detail}
