from django.apps import AppConfig


class PdeConfig(AppConfig):
    name = "pde"
