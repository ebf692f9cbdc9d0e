from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = "Measures how long a shrunk ball stays void"
    kind = "front"
