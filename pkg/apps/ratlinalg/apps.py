from django.apps import AppConfig


class RatlinalgConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.ratlinalg'
    verbose_name = 'Exact rational linear algebra'
