from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = "Checks the conditions at 0 and at infinity of a coefficient"
    kind = "analyze-coefficient"
