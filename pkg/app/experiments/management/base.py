"""
Shared behaviour of the experiment management commands
"""
import json
import logging
import os
from contextlib import contextmanager

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from core.exceptions import LabError
from experiments.runner import run
from experiments.writers import dumps, ensure_directory, write_json

# Exit codes
VALIDATION_FAILED = 2
RUNTIME_FAILED = 3
ACCEPTANCE_FAILED = 4


@contextmanager
def quiet_logging(quiet: bool):
    """Raises the app loggers to WARNING until the block exits"""

    loggers = (
        [logging.getLogger(name) for name in settings.INSTALLED_APPS[1:]]
        if quiet
        else []
    )
    saved = [logger.level for logger in loggers]
    for logger in loggers:
        logger.setLevel(logging.WARNING)
    try:
        yield
    finally:
        for logger, level in zip(loggers, saved):
            logger.setLevel(level)


class ExperimentCommand(BaseCommand):
    """
    Runs the experiment `kind` from a JSON config.

    Exit codes: 0 success, 2 invalid config, 3 runtime error, 4 failed
    acceptance checks.
    """

    kind = None

    def add_arguments(self, parser):
        parser.add_argument(
            "--config",
            required=True,
            help="Path of the JSON experiment config",
        )
        parser.add_argument(
            "--out",
            help="Output directory (defaults to LAB['OUTPUT_DIR']/<kind>)",
        )
        parser.add_argument(
            "--seed",
            type=int,
            help="Seed of the randomized checks, overrides the config",
        )
        parser.add_argument(
            "--quiet",
            action="store_true",
            help="Only log warnings and errors",
        )

    def load_config(self, path: str) -> dict:
        try:
            with open(path) as handle:
                config = json.load(handle)
        except (OSError, ValueError) as exc:
            raise CommandError(
                f"Cannot read config {path}: {exc}",
                returncode=VALIDATION_FAILED,
            )
        if not isinstance(config, dict):
            raise CommandError(
                "The config must be a JSON object",
                returncode=VALIDATION_FAILED,
            )
        return config

    def invalid(self, out: str, detail) -> CommandError:
        ensure_directory(out)
        write_json(os.path.join(out, "errors.json"), {"errors": detail})
        return CommandError(
            f"Invalid configuration: {dumps(detail)}",
            returncode=VALIDATION_FAILED,
        )

    def handle(self, *args, **options):
        with quiet_logging(options["quiet"]):
            self.run_experiment(options)

    def run_experiment(self, options):
        out = options["out"] or os.path.join(
            settings.LAB["OUTPUT_DIR"], self.kind
        )
        config = self.load_config(options["config"])
        config.setdefault("kind", self.kind)
        if config["kind"] != self.kind:
            raise self.invalid(
                out, {"kind": [f"This command runs '{self.kind}'."]}
            )

        try:
            result = run(config, out, seed=options["seed"])
        except serializers.ValidationError as exc:
            raise self.invalid(out, exc.detail)
        except (LabError, OSError) as exc:
            raise CommandError(
                f"{self.kind} failed: {exc}", returncode=RUNTIME_FAILED
            )

        if not result.passed:
            raise CommandError(
                f"Acceptance checks failed, see {out}/results.json",
                returncode=ACCEPTANCE_FAILED,
            )
        self.stdout.write(self.style.SUCCESS(f"Results written to {out}"))
