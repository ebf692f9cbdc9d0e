"""
Contains the core report models shared by every checker
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exceptions import InternalInvariantError


class Verdict:
    """
    Three-way verdict of a numerical condition check
    """

    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"

    CHOICES = (SATISFIED, VIOLATED, INCONCLUSIVE)


@dataclass(frozen=True)
class ConditionReport:
    """
    Verdict on a condition or structural assumption, sampled on a grid.

    Parameters
    ----------
    condition: str
        The condition id (test1, test2, at-infinity or an assumption id)
    verdict: str
        One of `Verdict.CHOICES`
    constants: dict
        Fitted constants (limsup estimate, (c, mu) pair, growth fit, ...)
    witness: dict, optional
        Point(s) at which the defining inequality fails, together with the
        recorded value and the bound it breaks. Present iff violated.
    grid: dict
        Description of the sampling grid, so the verdict can be reproduced
    """

    condition: str
    verdict: str
    constants: dict = field(default_factory=dict)
    witness: Optional[dict] = None
    grid: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict not in Verdict.CHOICES:
            raise InternalInvariantError(f"Unknown verdict: {self.verdict}")
        # A violation is only reported together with its witness
        if (self.verdict == Verdict.VIOLATED) != (self.witness is not None):
            raise InternalInvariantError(
                "A witness must be present iff the verdict is violated"
            )

    @property
    def satisfied(self) -> bool:
        return self.verdict == Verdict.SATISFIED

    @property
    def violated(self) -> bool:
        return self.verdict == Verdict.VIOLATED
