from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = "Verifies the self-similar solution and its coefficient"
    kind = "counterexample"
