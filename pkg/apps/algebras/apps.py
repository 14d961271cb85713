from django.apps import AppConfig


class AlgebrasConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.algebras'
    verbose_name = 'Pre-Jacobi-Jordan algebras'
