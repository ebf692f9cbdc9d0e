"""
Contains the self-similar infinite speed solution
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from core.exceptions import (
    DomainError,
    InternalInvariantError,
    ParameterError,
)

logger = logging.getLogger(__name__)

# Relative agreement required between analytic and difference derivatives
DERIVATIVE_RTOL = 1e-6
DIFFERENCE_STEPS = (1e-3, 1e-4, 1e-5, 1e-6)


class SelfSimilarSample(NamedTuple):
    u: np.ndarray
    u_t: np.ndarray
    laplacian: np.ndarray


@dataclass(frozen=True)
class SelfSimilarSolution:
    """
    u(x, t) = f(|x| / sqrt(2t)) with f(s) = exp(-s^lam), lam > 2.

    It solves u_t = a(u) Lap u for the counter-example coefficient where
    s > s0 = ((lam + N - 2)/lam)^(1/lam) and 0 < t < 1. The spliced
    coefficient is on its logarithmic branch beyond
    s_splice = 2^(1/lam) s0.
    """

    lam: float
    N: int = 1

    def __post_init__(self) -> None:
        if not self.lam > 2:
            raise ParameterError(f"Shape lambda must be > 2: {self.lam}")
        if int(self.N) != self.N or self.N < 1:
            raise ParameterError(f"Dimension N must be >= 1: {self.N}")
        self._validate_derivatives()

    @property
    def shift(self) -> float:
        return self.lam + self.N - 2

    @property
    def s0(self) -> float:
        return (self.shift / self.lam) ** (1 / self.lam)

    @property
    def s_splice(self) -> float:
        return 2 ** (1 / self.lam) * self.s0

    def similarity(self, r, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if (t <= 0).any():
            raise DomainError("The self-similar solution needs t > 0")
        return np.abs(np.asarray(r, dtype=float)) / np.sqrt(2 * t)

    def evaluate(self, r, t) -> SelfSimilarSample:
        """
        u, u_t = lam s^lam u / (2t) and
        Lap u = lam s^(lam - 2) (lam s^lam - (lam + N - 2)) u / (2t)
        """
        s = self.similarity(r, t)
        t = np.broadcast_to(np.asarray(t, dtype=float), s.shape)
        s_lam = s**self.lam
        u = np.exp(-s_lam)
        u_t = self.lam * s_lam * u / (2 * t)
        laplacian = (
            self.lam
            * s ** (self.lam - 2)
            * (self.lam * s_lam - self.shift)
            * u
            / (2 * t)
        )
        return SelfSimilarSample(u, u_t, laplacian)

    def difference_errors(self, r, t) -> tuple[np.ndarray, np.ndarray]:
        """
        Relative errors of the analytic u_t and Lap u against central
        differences, minimized over the step sweep.
        """
        r = np.asarray(r, dtype=float)
        t = np.asarray(t, dtype=float)
        exact = self.evaluate(r, t)

        def u(rr, tt):
            return np.exp(-self.similarity(rr, tt) ** self.lam)

        time_errors, space_errors = [], []
        for step in DIFFERENCE_STEPS:
            k, h = step * t, step * r
            u_t = (u(r, t + k) - u(r, t - k)) / (2 * k)
            u_r = (u(r + h, t) - u(r - h, t)) / (2 * h)
            u_rr = (u(r + h, t) - 2 * u(r, t) + u(r - h, t)) / h**2
            laplacian = u_rr + (self.N - 1) / r * u_r
            time_errors.append(np.abs(u_t / exact.u_t - 1))
            space_errors.append(np.abs(laplacian / exact.laplacian - 1))
        return np.min(time_errors, axis=0), np.min(space_errors, axis=0)

    def _validate_derivatives(self) -> None:
        s = np.array([1.3, 1.6, 2.0]) * self.s_splice
        t = np.full_like(s, 0.5)
        time_error, space_error = self.difference_errors(s, t)
        worst = max(time_error.max(), space_error.max())
        logger.debug("Self-similar derivative check: %.2e", worst)
        if worst > DERIVATIVE_RTOL:
            raise InternalInvariantError(
                f"Analytic derivatives disagree with differences: {worst}"
            )

    def to_dict(self) -> dict:
        return {**asdict(self), "s0": self.s0, "s_splice": self.s_splice}
