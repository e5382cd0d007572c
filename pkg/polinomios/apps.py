from django.apps import AppConfig


class PolinomiosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'polinomios'
    verbose_name = 'Laboratorio OPUC'
