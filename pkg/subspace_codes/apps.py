from django.apps import AppConfig


class SubspaceCodesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'subspace_codes'
    verbose_name = 'Subspace codes'
