from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = "Runs one experiment per point of a parameter grid"
    kind = "sweep"
