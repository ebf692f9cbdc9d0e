"""
Contains the parameters of the structural assumptions on (H, F)
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from core.exceptions import ParameterError


@dataclass(frozen=True)
class AssumptionParams:
    """
    Exponents and bounds of one structural assumption.

    Parameters
    ----------
    assumption: str
        One of `AssumptionParams.REQUIRED`
    gamma1, p, p1, q1, beta, beta1, beta2: float, optional
        Exponents, as the assumption uses them
    betas: tuple of float
        Exponents of the multi-term assumption
    M: float, optional
        Bound on the solution, for the bounded-type assumptions
    s_max: float
        Upper end of the sampled range for the global assumptions
    """

    # Bounded-type assumptions hold on [0, M], the others on [0, s_max]
    BOUNDED = ("hh-product", "fh-product")
    REQUIRED = {
        "hh-product": ("gamma1", "M"),
        "fh-product": ("gamma1", "M"),
        "unbounded-monotone": ("p",),
        "no-h-prime-1": ("p1", "q1"),
        "no-h-prime-2": ("gamma1", "beta"),
        "ext-no-h-prime-2": ("gamma1", "beta1", "beta2", "q1"),
        "multi-term": ("gamma1", "betas"),
    }

    assumption: str
    gamma1: Optional[float] = None
    p: Optional[float] = None
    p1: Optional[float] = None
    q1: Optional[float] = None
    beta: Optional[float] = None
    beta1: Optional[float] = None
    beta2: Optional[float] = None
    betas: tuple = field(default_factory=tuple)
    M: Optional[float] = None
    s_max: float = 10.0

    def __post_init__(self) -> None:
        if self.assumption not in self.REQUIRED:
            raise ParameterError(f"Unknown assumption: {self.assumption}")
        object.__setattr__(self, "betas", tuple(self.betas))

        for name in self.REQUIRED[self.assumption]:
            value = getattr(self, name)
            if value is None or value == ():
                raise ParameterError(
                    f"Assumption '{self.assumption}' needs '{name}'"
                )
        for name in ("gamma1", "p1", "q1", "beta", "beta1", "beta2", "M"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ParameterError(f"'{name}' must be positive: {value}")
        if self.p is not None and not self.p >= 0:
            raise ParameterError(f"'p' must be nonnegative: {self.p}")
        if any(not b > 0 for b in self.betas):
            raise ParameterError("Every exponent in 'betas' must be positive")
        if not self.s_max > 0.1:
            raise ParameterError("s_max must exceed 0.1")

        if self.assumption == "ext-no-h-prime-2" and not (
            self.beta1 > self.beta2 > self.q1 / 2
        ):
            raise ParameterError(
                "The extended assumption needs beta1 > beta2 > q1/2"
            )

    @property
    def bounded(self) -> bool:
        return self.assumption in self.BOUNDED

    @property
    def upper(self) -> float:
        return self.M if self.bounded else self.s_max

    def to_dict(self) -> dict:
        data = {k: v for k, v in asdict(self).items() if v not in (None, ())}
        if "betas" in data:
            data["betas"] = list(data["betas"])
        return data
