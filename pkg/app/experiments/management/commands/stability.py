from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = "Checks the decay of the Lyapunov functionals of a run"
    kind = "stability"
