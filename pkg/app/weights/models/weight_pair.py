"""
Contains the weight models: h, its antiderivative H and F = h a
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Callable, NamedTuple, Union

import numpy as np
from django.conf import settings

from coefficients.models import Coefficient
from core.exceptions import DomainError, ParameterError
from core.mixins import MonomialMixin
from core.utils import integrate_segment

Number = Union[float, np.ndarray]


def _as_nonnegative(s: Number) -> np.ndarray:
    values = np.asarray(s, dtype=float)
    if np.isnan(values).any() or (values < 0).any():
        raise DomainError("Weights are only defined for s >= 0")
    return values


def _like_input(values: np.ndarray, result: np.ndarray) -> Number:
    if values.ndim == 0:
        return float(result.reshape(-1)[0])
    return result.reshape(values.shape)


class WeightPair(ABC):
    """
    Abstract weight h >= 0 on (0, inf) with H(v) = int_0^v h(r) dr and
    F(v) = h(v) a(v) for a given coefficient a.

    * Abstract class
    """

    family = ""

    @abstractmethod
    def _h(self, s: np.ndarray) -> np.ndarray:
        """h on a 1-d array of nonnegative values"""

    @abstractmethod
    def _H(self, s: np.ndarray) -> np.ndarray:
        """H on a 1-d array of nonnegative values"""

    @abstractmethod
    def to_dict(self) -> dict:
        """The JSON description of the weight"""

    def eval_h(self, s: Number) -> Number:
        values = _as_nonnegative(s)
        with np.errstate(divide="ignore"):
            result = self._h(np.atleast_1d(values))
        return _like_input(values, result)

    def eval_H(self, s: Number) -> Number:
        """
        Evaluates H(s), with H(0) = 0.

        Raises
        ------
        DomainError
            If s < 0, or if h is not integrable near 0
        """
        values = _as_nonnegative(s)
        result = self._H(np.atleast_1d(values))
        return _like_input(values, result)

    def eval_F(self, coeff: Coefficient, s: Number) -> Number:
        """
        Evaluates F(s) = h(s) a(s), with the convention F(0) = 0.
        """
        values = _as_nonnegative(s)
        flat = np.atleast_1d(values)
        result = np.zeros_like(flat)
        positive = flat > 0
        result[positive] = self._h(flat[positive]) * coeff.eval_a(
            flat[positive]
        )
        return _like_input(values, result)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightPair) and self.to_dict() == other.to_dict()
        )

    def __hash__(self) -> int:
        return hash(repr(self.to_dict()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_dict()})"


class PowerWeight(MonomialMixin, WeightPair):
    """
    H(s) = scale s^(1 - gamma), h(s) = scale (1 - gamma) s^-gamma
    """

    family = "power"

    def __init__(self, gamma: float, scale: float = 1.0) -> None:
        if not 0 <= gamma < 1:
            raise ParameterError(f"Weight exponent must be in [0, 1): {gamma}")
        if not scale > 0:
            raise ParameterError(f"Weight scale must be > 0: {scale}")
        self.gamma = float(gamma)
        self.scale = float(scale)

    def _h(self, s):
        return self.scale * (1 - self.gamma) * s ** (-self.gamma)

    def _H(self, s):
        return self.scale * s ** (1 - self.gamma)

    def monomial(self):
        return self.scale, 1 - self.gamma

    def to_dict(self):
        return {
            "family": self.family,
            "gamma": self.gamma,
            "scale": self.scale,
        }


class Expression(NamedTuple):
    h: Callable[[np.ndarray], np.ndarray]
    # Closed-form H, kept for cross-checks only
    H: Callable[[np.ndarray], np.ndarray]


def _inverse_H(s):
    return np.where(s > 0, np.inf, 0.0)


class CustomWeight(WeightPair):
    """
    Weight given by a registered closed-form h. H is computed by adaptive
    quadrature of h over [0, s].
    """

    family = "custom"

    EXPRESSIONS = {
        "log1p": Expression(
            h=lambda s: 1.0 / (1.0 + s),
            H=np.log1p,
        ),
        "exp-decay": Expression(
            h=lambda s: np.exp(-s),
            H=lambda s: -np.expm1(-s),
        ),
        # Not locally integrable at 0
        "inverse": Expression(
            h=lambda s: 1.0 / s,
            H=_inverse_H,
        ),
    }

    def __init__(self, expression: str) -> None:
        if expression not in self.EXPRESSIONS:
            raise ParameterError(f"Unknown weight expression: {expression}")
        self.expression = expression

    def _h(self, s):
        return self.EXPRESSIONS[self.expression].h(s)

    def _H(self, s):
        tol = settings.LAB["QUAD_TOL"]
        out = np.zeros(s.size)
        for i, x in enumerate(s.ravel()):
            if x == 0:
                continue
            value, _, converged = integrate_segment(
                lambda r: float(self._h(np.asarray(r))), 0.0, x, tol
            )
            if not converged:
                raise DomainError(
                    f"h = '{self.expression}' is not integrable on [0, {x}]"
                )
            out[i] = value
        return out.reshape(s.shape)

    def closed_form_H(self, s: Number) -> Number:
        values = _as_nonnegative(s)
        result = self.EXPRESSIONS[self.expression].H(np.atleast_1d(values))
        return _like_input(values, result)

    def to_dict(self):
        return {"family": self.family, "h": self.expression}
