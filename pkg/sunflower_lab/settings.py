"""
Django settings for the sunflower_lab project.

The project is a batch toolkit: there is no URL routing and no web server.
Django provides settings, management commands (the CLI), the ORM used by the
search certificate ledger, and the test runner.

Per-machine overrides go in a `.env` file next to manage.py, e.g.

    SUBSPACE_CODES_CODE_BUDGET=200000
    SUBSPACE_CODES_LOG_LEVEL=DEBUG
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / '.env')


# Not used for sessions or signing; required by Django.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'sunflower-lab-batch-only-key')

DEBUG = os.environ.get('DJANGO_DEBUG', '1') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'subspace_codes',
    'search_lab',
]

MIDDLEWARE = []


# Database

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Default primary key field type

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


_INTEGER_OVERRIDES = (
    'GRASSMANNIAN_BUDGET', 'CODE_BUDGET', 'ORACLE_BUDGET', 'CLIQUE_NODE_BUDGET', 'MAX_RESAMPLE', 'POINTSET_LIMIT',
)


def subspace_code_overrides(environ=os.environ):
    """SUBSPACE_CODES_* variables that are set; every other key falls back to subspace_codes.conf.DEFAULTS."""
    overrides = {}
    for name in _INTEGER_OVERRIDES:
        raw = environ.get(f'SUBSPACE_CODES_{name}', '').strip()
        if raw:
            overrides[name] = int(raw.replace('_', ''))
    raw = environ.get('SUBSPACE_CODES_STRICT_CHECKS', '').strip()
    if raw:
        overrides['STRICT_CHECKS'] = raw.lower() in ('1', 'true', 'yes', 'on')
    return overrides


# Subspace code toolkit configuration
# Budgets guard every exhaustive enumeration; exceeding one is reported, never truncated silently.
SUBSPACE_CODES = subspace_code_overrides()


# Logging
# JSON documents go to stdout from the commands; library diagnostics go to stderr.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'subspace_codes': {
            'handlers': ['console'],
            'level': os.environ.get('SUBSPACE_CODES_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
        'search_lab': {
            'handlers': ['console'],
            'level': os.environ.get('SUBSPACE_CODES_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
