"""
Contains the FrontReport model
"""
from dataclasses import dataclass, field

FINITE_SPEED = "finite-speed-consistent"
IMMEDIATE_POSITIVITY = "immediate-positivity"


@dataclass(frozen=True)
class FrontReport:
    """
    Propagation front of a trajectory against a ball B void at t = 0.

    Parameters
    ----------
    ball: tuple
        (lo, hi) of B
    shrunk_ball: tuple
        (lo, hi) of the shrunk ball eps B
    epsilon: float
    thresholds: list
        The support thresholds eps_supp 10^k, ascending
    t_prime: float
        First output time at which u >= eps_supp on eps B (t_end if never)
    t_prime_by_threshold: list
        The same time for every threshold
    supports: list
        Per threshold, per output time, the hull [lo, hi] of the nodes
        with u >= threshold (None when empty)
    verdict: str
        FINITE_SPEED or IMMEDIATE_POSITIVITY
    """

    ball: tuple
    shrunk_ball: tuple
    epsilon: float
    thresholds: list
    t_prime: float
    t_prime_by_threshold: list
    supports: list = field(repr=False)
    verdict: str = FINITE_SPEED

    @property
    def immediate_positivity(self) -> bool:
        return self.verdict == IMMEDIATE_POSITIVITY

    def to_dict(self) -> dict:
        return {
            "ball": list(self.ball),
            "shrunk_ball": list(self.shrunk_ball),
            "epsilon": self.epsilon,
            "thresholds": list(self.thresholds),
            "t_prime": self.t_prime,
            "t_prime_by_threshold": list(self.t_prime_by_threshold),
            "supports": self.supports,
            "verdict": self.verdict,
        }
