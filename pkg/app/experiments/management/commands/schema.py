import os
import shutil

from django.conf import settings
from django.core.management.base import BaseCommand

from experiments.writers import ensure_directory

SCHEMA_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "schemas"
)


class Command(BaseCommand):
    help = "Writes the JSON schemas of the configs and results files"

    def add_arguments(self, parser):
        parser.add_argument("--out", help="Output directory")
        parser.add_argument("--quiet", action="store_true")

    def handle(self, *args, **options):
        out = options["out"] or os.path.join(
            settings.LAB["OUTPUT_DIR"], "schema"
        )
        ensure_directory(out)
        names = sorted(
            name for name in os.listdir(SCHEMA_DIR) if name.endswith(".json")
        )
        for name in names:
            shutil.copyfile(
                os.path.join(SCHEMA_DIR, name), os.path.join(out, name)
            )
        if not options["quiet"]:
            self.stdout.write(f"{len(names)} schemas written to {out}")
