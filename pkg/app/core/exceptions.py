"""
Contains custom core exceptions
"""


class LabError(Exception):
    """
    Base class for every error raised by the laboratory
    """

    pass


class DomainError(LabError):
    """
    Custom exception for raising when an argument is outside the
    domain of an operation (negative s, t < t0, sample outside the
    validity region, ...)
    """

    pass


class ParameterError(LabError):
    """
    Custom exception for raising when construction parameters are invalid
    """

    pass


class DivergenceError(LabError):
    """
    Custom exception for raising when an improper integral fails to converge.

    Carries the partial sum accumulated so far and the upper limit
    (in the integration variable) that was reached.
    """

    def __init__(
        self,
        message: str,
        partial_sum: float,
        upper_limit: float,
    ) -> None:
        super().__init__(message)
        self.partial_sum = partial_sum
        self.upper_limit = upper_limit


class StiffnessError(LabError):
    """
    Custom exception for raising when the CFL restricted time step underflows
    """

    def __init__(self, message: str, dt: float, time: float) -> None:
        super().__init__(message)
        self.dt = dt
        self.time = time


class InternalInvariantError(LabError):
    """
    Custom exception for raising when a computed quantity breaks an
    invariant that the algorithm guarantees (bug guard)
    """

    pass
