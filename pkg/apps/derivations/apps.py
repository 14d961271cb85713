from django.apps import AppConfig


class DerivationsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.derivations'
    verbose_name = 'Derivations and antiderivations'
