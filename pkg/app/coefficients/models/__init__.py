from .coefficient import (  # noqa
    Coefficient,
    ConstantCoefficient,
    CounterexampleCoefficient,
    PowerLawCoefficient,
    TabulatedCoefficient,
)
from .coefficient_factory import (  # noqa
    CoefficientFactory,
    make_counterexample,
)
