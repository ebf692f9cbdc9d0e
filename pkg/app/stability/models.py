"""
Contains the stability models: decay envelopes, functional series and
the parameters of the differential inequalities
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from core.exceptions import ParameterError


@dataclass(frozen=True)
class DecayEnvelope:
    """
    Closed-form bound [k (beta - 1)(t - t0) + Y0^-(beta - 1)]^(-1/(beta - 1))
    of Y' + k Y^beta <= 0 with Y(t0) = Y0.
    """

    k: float
    beta: float
    Y0: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        if not self.k > 0:
            raise ParameterError(f"Envelope rate k must be > 0: {self.k}")
        if not self.beta > 1:
            raise ParameterError(
                f"Envelope exponent beta must be > 1: {self.beta}"
            )
        if not self.Y0 >= 0:
            raise ParameterError(f"Initial value must be >= 0: {self.Y0}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class FunctionalSeries:
    """
    Values Y_i >= 0 of a functional at strictly increasing times t_i.

    Parameters
    ----------
    times: ndarray
    values: ndarray
    descriptor: dict
        How the series was computed (weight, exponent, quadrature)
    """

    times: np.ndarray
    values: np.ndarray
    descriptor: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=float)
        values = np.array(self.values, dtype=float)
        if times.shape != values.shape or times.ndim != 1:
            raise ParameterError("Times and values must be parallel arrays")
        if (np.diff(times) <= 0).any():
            raise ParameterError("Series times must be strictly increasing")
        if (values < 0).any() or not np.isfinite(values).all():
            raise ParameterError("Series values must be finite and >= 0")
        times.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.times.size

    def to_dict(self) -> dict:
        return {
            "times": self.times.tolist(),
            "values": self.values.tolist(),
            "descriptor": self.descriptor,
        }


@dataclass(frozen=True)
class OdiParams:
    """
    Exponents of one differential inequality Y' + rate W Y^e <= 0.

    Theorem ids and the exponent e of Y:

    * basic: e = (m + gamma)/m, Y = int u^m
    * bounded: e = (p + 1 + gamma1)/(p + 1), Y = int H^(p+1)
    * no-h-prime: e = 2/delta1, Y = int H^(p1+1)
    * no-h-prime-z: as no-h-prime, W = [Z + 1]^-((2 - delta2)/delta2)
    * extended: as no-h-prime-z with Z = Z1 + Z2
    * multi-term: as no-h-prime-z with Z the sum of one Z_i per beta_i

    `rate` is used when the rate mode is analytic, otherwise the measured
    minimal rate is used.
    """

    THEOREMS = {
        "basic": ("m", "gamma"),
        "bounded": ("p", "gamma1"),
        "no-h-prime": ("p1", "gamma1"),
        "no-h-prime-z": ("p1", "gamma1", "q1", "beta"),
        "extended": ("p1", "gamma1", "q1", "beta1", "beta2"),
        "multi-term": ("p1", "gamma1", "q1", "betas"),
    }
    ANALYTIC = "analytic"
    FITTED = "fitted"

    theorem: str
    m: Optional[float] = None
    gamma: Optional[float] = None
    p: Optional[float] = None
    gamma1: Optional[float] = None
    p1: Optional[float] = None
    q1: Optional[float] = None
    beta: Optional[float] = None
    beta1: Optional[float] = None
    beta2: Optional[float] = None
    betas: tuple = field(default_factory=tuple)
    N: int = 1
    rate_mode: str = FITTED
    rate: Optional[float] = None

    def __post_init__(self) -> None:
        if self.theorem not in self.THEOREMS:
            raise ParameterError(f"Unknown theorem id: {self.theorem}")
        object.__setattr__(self, "betas", tuple(self.betas))
        for name in self.THEOREMS[self.theorem]:
            value = getattr(self, name)
            if value is None or value == ():
                raise ParameterError(
                    f"Theorem '{self.theorem}' needs '{name}'"
                )
        if int(self.N) != self.N or self.N < 1:
            raise ParameterError(f"Dimension N must be >= 1: {self.N}")
        if self.rate_mode not in (self.ANALYTIC, self.FITTED):
            raise ParameterError(f"Unknown rate mode: {self.rate_mode}")
        if self.rate_mode == self.ANALYTIC and not (
            self.rate is not None and self.rate > 0
        ):
            raise ParameterError("An analytic rate mode needs a rate > 0")

        if self.theorem == "basic" and not (
            0 <= self.gamma < 1 and self.m >= 1
        ):
            raise ParameterError(
                "The basic model needs 0 <= gamma < 1 and m >= 1"
            )
        if self.uses_delta:
            if not 1 <= self.delta1 < 2:
                raise ParameterError(
                    f"delta1 = (p1 + 1)/(gamma1 + 1) = {self.delta1} "
                    "must lie in [1, 2)"
                )
        if self.theorem == "extended" and not (
            self.beta1 > self.beta2 > self.q1 / 2
        ):
            raise ParameterError(
                "The extended form needs beta1 > beta2 > q1/2"
            )
        if self.z_count and any(p <= 0 for p in self.z_exponents):
            raise ParameterError(
                "Every beta must exceed q1/2 for a positive Z exponent"
            )

    @property
    def uses_delta(self) -> bool:
        return self.theorem not in ("basic", "bounded")

    @property
    def delta1(self) -> float:
        return (self.p1 + 1) / (self.gamma1 + 1)

    @property
    def delta2(self) -> float:
        delta1, N = self.delta1, self.N
        if N == 1 or delta1 <= N / (N - 1):
            return 1.0
        return delta1 * N / (N + delta1)

    @property
    def exponent(self) -> float:
        """Exponent of Y in the inequality"""
        if self.theorem == "basic":
            return (self.m + self.gamma) / self.m
        if self.theorem == "bounded":
            return (self.p + 1 + self.gamma1) / (self.p + 1)
        return 2 / self.delta1

    @property
    def y_exponent(self) -> float:
        """Power of H(u) integrated in Y"""
        if self.theorem == "basic":
            return self.m
        if self.theorem == "bounded":
            return self.p + 1
        return self.p1 + 1

    def _z_exponent(self, beta: float) -> float:
        delta2 = self.delta2
        return (beta - self.q1 / 2) * 2 * delta2 / (2 - delta2)

    @property
    def z_exponents(self) -> list:
        """p0, (p2, p3), or one exponent per beta_i"""
        if self.theorem == "no-h-prime-z":
            return [self._z_exponent(self.beta)]
        if self.theorem == "extended":
            return [self._z_exponent(self.beta1), self._z_exponent(self.beta2)]
        if self.theorem == "multi-term":
            return [self._z_exponent(beta) for beta in self.betas]
        return []

    @property
    def z_count(self) -> int:
        return len(self.z_exponents)

    @property
    def weight_exponent(self) -> float:
        """(2 - delta2)/delta2, the power of [Z + 1] dividing the rate"""
        return (2 - self.delta2) / self.delta2

    def to_dict(self) -> dict:
        data = {k: v for k, v in asdict(self).items() if v not in (None, ())}
        if "betas" in data:
            data["betas"] = list(data["betas"])
        data["exponent"] = self.exponent
        if self.uses_delta:
            data["delta1"] = self.delta1
            data["delta2"] = self.delta2
            data["z_exponents"] = self.z_exponents
        return data


@dataclass(frozen=True)
class EnvelopeReport:
    """
    Dominance of a series by a decay envelope.

    `witness` is the first sample with Y > (1 + slack) envelope. The tail
    exponent is the log-log slope of Y against t - t0 over the last
    decade of times (None when it cannot be fitted).
    """

    dominated: bool
    slack: float
    witness: Optional[dict]
    monotone: bool
    monotonicity_violations: list
    tail_exponent: Optional[float]
    zero_persistent: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class OdiReport:
    """
    Sampled check of Y' + rate W Y^e <= slack max|Y'| at interior times.

    `measured_rate` is the smallest rate for which the sampled inequality
    is tight (None when Y or W vanish everywhere).
    """

    theorem: str
    exponent: float
    rate: Optional[float]
    measured_rate: Optional[float]
    holds: bool
    max_excess: float
    slack: float
    witness: Optional[dict]

    def to_dict(self) -> dict:
        return asdict(self)
