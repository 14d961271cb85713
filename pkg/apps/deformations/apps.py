from django.apps import AppConfig


class DeformationsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.deformations'
    verbose_name = 'Linear deformations and Nijenhuis operators'
