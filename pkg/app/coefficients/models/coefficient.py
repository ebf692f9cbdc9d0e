"""
Contains the diffusion coefficient models a(s)
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Union

import numpy as np

from core.exceptions import DomainError, ParameterError
from core.mixins import ClosedFormIntegralMixin, MonomialMixin

Number = Union[float, np.ndarray]


class Coefficient(ABC):
    """
    Abstract diffusion coefficient a: [0, inf) -> [0, inf).

    Degenerate families satisfy a(0) = 0 and a(s) > 0 for s > 0; instances
    are immutable once built.

    * Abstract class
    """

    family = ""
    # The condition checkers only accept degenerate coefficients
    degenerate = True

    def eval_a(self, s: Number) -> Number:
        """
        Evaluates a(s).

        Parameters
        ----------
        s: float or ndarray
            Concentration value(s), must be nonnegative

        Returns
        -------
        float or ndarray
            a(s), with the shape of `s`

        Raises
        ------
        DomainError
            If any `s` is negative or not a number
        """
        values = np.asarray(s, dtype=float)
        if np.isnan(values).any() or (values < 0).any():
            raise DomainError("a(s) is only defined for s >= 0")
        result = self._evaluate(np.atleast_1d(values))
        if values.ndim == 0:
            return float(result[0])
        return result.reshape(values.shape)

    @abstractmethod
    def _evaluate(self, s: np.ndarray) -> np.ndarray:
        """
        Child classes must implement `_evaluate` for a 1-d array of
        nonnegative values.
        """

    @property
    @abstractmethod
    def params(self) -> dict:
        """
        The family parameters, as serialized under "params"
        """

    @classmethod
    @abstractmethod
    def from_params(cls, params: dict) -> Coefficient:
        """
        Child classes must implement `from_params` to build a coefficient
        from its JSON parameters.
        """

    def breakpoints(self) -> tuple:
        """Points where a(s) is not smooth (quadrature split points)"""
        return ()

    def to_dict(self) -> dict:
        return {"family": self.family, "params": self.params}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coefficient)
            and self.to_dict() == other.to_dict()
        )

    def __hash__(self) -> int:
        return hash((self.family, repr(self.params)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.params})"


class PowerLawCoefficient(
    ClosedFormIntegralMixin,
    MonomialMixin,
    Coefficient,
):
    """
    a(s) = k s^rho, the basic degenerate model
    """

    family = "power-law"

    def __init__(self, k: float, rho: float) -> None:
        if not k > 0:
            raise ParameterError(f"Power law scale k must be > 0, got {k}")
        if not rho > 0:
            raise ParameterError(
                f"Power law exponent rho must be > 0, got {rho}"
            )
        self.k = float(k)
        self.rho = float(rho)

    def _evaluate(self, s):
        return self.k * s**self.rho

    @property
    def params(self):
        return {"k": self.k, "rho": self.rho}

    @classmethod
    def from_params(cls, params):
        return cls(params["k"], params["rho"])

    def closed_form_I(self, s):
        s = np.asarray(s, dtype=float)
        return 1.0 / (self.k * self.rho * s**self.rho)

    def monomial(self):
        return self.k, self.rho


class ConstantCoefficient(MonomialMixin, Coefficient):
    """
    a(s) = k, the classical heat equation (non-degenerate reference case)
    """

    family = "constant"
    degenerate = False

    def __init__(self, k: float) -> None:
        if not k > 0:
            raise ParameterError(f"Constant coefficient must be > 0, got {k}")
        self.k = float(k)

    def _evaluate(self, s):
        return np.full_like(s, self.k)

    @property
    def params(self):
        return {"k": self.k}

    @classmethod
    def from_params(cls, params):
        return cls(params["k"])

    def monomial(self):
        return self.k, 0.0


class CounterexampleCoefficient(ClosedFormIntegralMixin, Coefficient):
    """
    Spliced coefficient of the infinite speed counter-example.

    On (0, u_star) a(u) = |ln u|^(2/lam) / (lam |ln u| - (lam + N - 2)),
    on [u_star, inf) a(u) = a_star (u + 1), and a(0) = 0.
    """

    family = "counterexample"

    def __init__(
        self,
        lam: float,
        N: int,
        u_star: float,
        a_star: float,
    ) -> None:
        if not lam > 2:
            raise ParameterError(f"Shape lambda must be > 2, got {lam}")
        if int(N) != N or N < 1:
            raise ParameterError(f"Dimension N must be an integer >= 1: {N}")
        if not 0 < u_star < 1:
            raise ParameterError(f"Splice point must lie in (0, 1): {u_star}")
        if not a_star > 0:
            raise ParameterError(f"Linear branch scale must be > 0: {a_star}")
        self.lam = float(lam)
        self.N = int(N)
        self.u_star = float(u_star)
        self.a_star = float(a_star)

        # |ln s| >= |ln u_star| on (0, u_star], so checking u_star suffices
        if not self.denominator(self.u_star) > 0:
            raise ParameterError(
                "Denominator lam|ln s| - (lam + N - 2) must be positive "
                f"on (0, u_star], u_star={u_star} is too large"
            )
        left = self.log_branch(self.u_star)
        right = self.a_star * (self.u_star + 1)
        if abs(left - right) > 1e-12 * left:
            raise ParameterError(
                f"Coefficient is discontinuous at u_star: {left} != {right}"
            )

    @property
    def shift(self) -> float:
        """lam + N - 2"""
        return self.lam + self.N - 2

    def denominator(self, s: Number) -> Number:
        return self.lam * np.abs(np.log(s)) - self.shift

    def log_branch(self, s: Number) -> Number:
        log_s = np.abs(np.log(s))
        return log_s ** (2 / self.lam) / (self.lam * log_s - self.shift)

    def _evaluate(self, s):
        out = np.zeros_like(s)
        low = (s > 0) & (s < self.u_star)
        out[low] = self.log_branch(s[low])
        high = s >= self.u_star
        out[high] = self.a_star * (s[high] + 1)
        return out

    def breakpoints(self):
        return (self.u_star,)

    @property
    def params(self):
        return {
            "lambda": self.lam,
            "N": self.N,
            "u_star": self.u_star,
            "a_star": self.a_star,
        }

    @classmethod
    def from_params(cls, params):
        return cls(
            params["lambda"],
            params["N"],
            params["u_star"],
            params["a_star"],
        )

    @cached_property
    def c_star(self) -> float:
        """I(u_star), the finite tail of the integral, by quadrature"""
        from ..quadrature import eval_I

        return eval_I(self, self.u_star).value

    def closed_form_I(self, s):
        """
        I(s) on (0, u_star] from the antiderivative of the logarithmic
        branch, plus the quadrature value of the tail `c_star`.
        """
        s = np.asarray(s, dtype=float)
        if (s <= 0).any() or (s > self.u_star).any():
            raise DomainError("Closed form I(s) only holds on (0, u_star]")
        lam = self.lam
        log_s = np.abs(np.log(s))
        log_star = abs(np.log(self.u_star))
        e1 = 2 - 2 / lam
        e2 = 1 - 2 / lam
        return (
            lam / e1 * (log_s**e1 - log_star**e1)
            - self.shift / e2 * (log_s**e2 - log_star**e2)
            + self.c_star
        )


class TabulatedCoefficient(Coefficient):
    """
    Coefficient given by a table (s_i, a_i), interpolated piecewise
    linearly. Beyond the last abscissa a(s) = a_last (s / s_last)^tail,
    constant for the default tail exponent 0.
    """

    family = "tabulated"

    def __init__(
        self,
        s_values: list[float],
        a_values: list[float],
        tail_exponent: float = 0.0,
    ) -> None:
        s_values = np.asarray(s_values, dtype=float)
        a_values = np.asarray(a_values, dtype=float)
        if s_values.ndim != 1 or s_values.shape != a_values.shape:
            raise ParameterError("Tables 's' and 'a' must be parallel lists")
        if s_values.size < 2:
            raise ParameterError("A tabulated coefficient needs >= 2 points")
        if (np.diff(s_values) <= 0).any():
            raise ParameterError("Abscissae must be strictly increasing")
        if s_values[0] != 0 or a_values[0] != 0:
            raise DomainError("A tabulated coefficient must start at a(0)=0")
        if (a_values[1:] <= 0).any():
            raise DomainError("a(s) must be positive for every s > 0")
        if not tail_exponent >= 0:
            raise ParameterError("Tail exponent must be >= 0")
        self.s_values = s_values
        self.a_values = a_values
        self.tail_exponent = float(tail_exponent)

    def _evaluate(self, s):
        s_last = self.s_values[-1]
        out = np.interp(s, self.s_values, self.a_values)
        beyond = s > s_last
        out[beyond] = (
            self.a_values[-1] * (s[beyond] / s_last) ** self.tail_exponent
        )
        return out

    def breakpoints(self):
        return tuple(float(x) for x in self.s_values[1:])

    @property
    def params(self):
        return {"tail_exponent": self.tail_exponent}

    @classmethod
    def from_params(cls, params):
        return cls(
            params["s"],
            params["a"],
            params.get("tail_exponent", 0.0),
        )

    def to_dict(self):
        return {
            "family": self.family,
            "params": self.params,
            "s": [float(x) for x in self.s_values],
            "a": [float(x) for x in self.a_values],
        }
