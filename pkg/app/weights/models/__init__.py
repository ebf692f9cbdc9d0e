from .weight_pair import (  # noqa
    CustomWeight,
    PowerWeight,
    WeightPair,
)
from .weight_pair_factory import WeightPairFactory  # noqa
from .assumption_params import AssumptionParams  # noqa
