"""
Access to the SUBSPACE_CODES settings dict.

The math modules are usable without a configured Django project; in that case
the defaults below apply.
"""
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'GRASSMANNIAN_BUDGET': 50_000,
    'CODE_BUDGET': 100_000,
    'ORACLE_BUDGET': 100_000,
    'CLIQUE_NODE_BUDGET': 10_000_000,
    'MAX_RESAMPLE': 100,
    'POINTSET_LIMIT': 65_536,
    'STRICT_CHECKS': True,
    'SCHEMA_VERSION': '1',
}


def get_setting(name):
    if name not in DEFAULTS:
        raise KeyError(f'Unknown SUBSPACE_CODES setting: {name}')
    try:
        configured = getattr(settings, 'SUBSPACE_CODES', {})
    except ImproperlyConfigured:
        configured = {}
    return configured.get(name, DEFAULTS[name])
