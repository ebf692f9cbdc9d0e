"""
Django settings for the diffusion-lab project.

The project has no web surface: Django provides the settings layer, the
application registry and the management command runner. Numeric defaults
live in the `LAB` dict and can be overridden with `LAB_<NAME>` environment
variables.
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


SECRET_KEY = os.getenv("SECRET_KEY", "diffusion-lab-local")

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # 3rd party apps
    "rest_framework",
    # Project apps
    "core",
    "coefficients",
    "weights",
    "pde",
    "stability",
    "oracles",
    "experiments",
]

# No persistence: results are files
DATABASES = {}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


def _float_env(name, default):
    return float(os.getenv(f"LAB_{name}", default))


def _int_env(name, default):
    return int(os.getenv(f"LAB_{name}", default))


# Numerical defaults shared by every experiment
LAB = {
    # Explicit scheme safety factor: dt * max a(u) / dr^2 <= CFL_SAFE
    "CFL_SAFE": _float_env("CFL_SAFE", 0.4),
    # Smallest admissible CFL step before a StiffnessError
    "MIN_DT": _float_env("MIN_DT", 1e-14),
    # Relative accuracy of the improper integral I(s)
    "QUAD_TOL": _float_env("QUAD_TOL", 1e-10),
    # Tail window doublings before a DivergenceError
    "QUAD_MAX_DOUBLINGS": _int_env("QUAD_MAX_DOUBLINGS", 60),
    # Support threshold relative to max(u0)
    "SUPPORT_THRESHOLD": _float_env("SUPPORT_THRESHOLD", 1e-10),
    "SUPPORT_DECADES": _int_env("SUPPORT_DECADES", 4),
    # limsup estimation
    "STABILIZATION_RTOL": _float_env("STABILIZATION_RTOL", 1e-3),
    "GROWTH_DECADES": _int_env("GROWTH_DECADES", 3),
    # Finite differences disagreeing by more than this are inconclusive
    "FD_DISAGREEMENT": _float_env("FD_DISAGREEMENT", 0.1),
    "ODE_RTOL": _float_env("ODE_RTOL", 1e-11),
    "OUTPUT_DIR": os.getenv(
        "LAB_OUTPUT_DIR",
        os.path.join(BASE_DIR, "results"),
    ),
}


LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "terse": {
            "format": "%(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "terse",
        },
    },
    "loggers": {
        name: {
            "handlers": ["console"],
            "level": os.getenv("LAB_LOG_LEVEL", "INFO"),
            "propagate": False,
        }
        for name in INSTALLED_APPS[1:]
    },
}
