from django.apps import AppConfig


class SearchLabConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'search_lab'
    verbose_name = 'Search lab'
