from django.apps import AppConfig


class CoefficientsConfig(AppConfig):
    name = "coefficients"
