from django.apps import AppConfig


class CohomologyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.cohomology'
    verbose_name = 'Zigzag cohomology'
