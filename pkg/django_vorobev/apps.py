from django.apps import AppConfig


class DjangoVorobevConfig(AppConfig):
    name = 'django_vorobev'
    verbose_name = "Vorob'ev"
    default_auto_field = 'django.db.models.AutoField'
