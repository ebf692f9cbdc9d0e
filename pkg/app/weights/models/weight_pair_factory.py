"""
Module containing the WeightPairFactory
"""
from core.exceptions import ParameterError

from .weight_pair import CustomWeight, PowerWeight, WeightPair


class WeightPairFactory:
    """
    Builds weights from {"family": "power", "gamma": ..., "scale": ...}
    or {"family": "custom", "h": "<expression id>"}
    """

    @staticmethod
    def from_spec(spec: dict) -> WeightPair:
        family = spec.get("family")
        if family == PowerWeight.family:
            if "gamma" not in spec:
                raise ParameterError("Power weights need 'gamma'")
            return PowerWeight(spec["gamma"], spec.get("scale", 1.0))
        if family == CustomWeight.family:
            if "h" not in spec:
                raise ParameterError("Custom weights need an expression 'h'")
            return CustomWeight(spec["h"])
        raise ParameterError(f"Unknown weight family: {family}")
