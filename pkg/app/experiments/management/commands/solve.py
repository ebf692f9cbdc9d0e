from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = "Solves the Dirichlet problem with the explicit scheme"
    kind = "solve"
