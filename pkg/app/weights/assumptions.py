"""
Contains the numeric checkers of the structural assumptions on the
weight pair (H, F).

Every assumption compares a derivative [H^alpha F^phi]' against a bound,
possibly divided by a power (or a sum of powers) of H. The derivative is
taken in closed form when both H and F are monomials, otherwise by
central differences with Richardson refinement.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from django.conf import settings

from coefficients.models import Coefficient
from core.mixins import MonomialMixin
from core.exceptions import ParameterError
from core.models import ConditionReport, Verdict
from core.utils import central_difference, log_grid

from .models import AssumptionParams, WeightPair

logger = logging.getLogger(__name__)

UPPER = "sup"
LOWER = "inf"

# Relative change of a constant under refinement accepted as converged
REFINEMENT_RTOL = 0.01
# Switch from log to linear spacing
KNEE = 0.1


@dataclass(frozen=True)
class AssumptionGrid:
    """
    Log-spaced points on [s_min, min(0.1, s_max)] plus linear points on
    [0.1, s_max] when s_max > 0.1
    """

    s_max: float
    s_min: float = 1e-8
    per_decade: int = 10
    n_linear: int = 50

    def __post_init__(self) -> None:
        if not 0 < self.s_min < self.s_max:
            raise ParameterError(
                f"Empty assumption grid [{self.s_min}, {self.s_max}]"
            )

    def points(self) -> np.ndarray:
        knee = min(KNEE, self.s_max)
        near_zero = log_grid(self.s_min, knee, self.per_decade)
        if self.s_max <= KNEE:
            return near_zero
        linear = np.linspace(KNEE, self.s_max, self.n_linear)
        return np.unique(np.concatenate([near_zero, linear]))

    def refined(self, extend_upper: bool) -> AssumptionGrid:
        """
        Doubles the density and pushes the lower end to s_min^2 (and the
        upper end by a factor 10 when `extend_upper`).
        """
        return AssumptionGrid(
            s_max=self.s_max * (10 if extend_upper else 1),
            s_min=self.s_min**2,
            per_decade=2 * self.per_decade,
            n_linear=2 * self.n_linear - 1,
        )

    def to_dict(self) -> dict:
        return {
            "kind": "log+linear",
            "min": self.s_min,
            "max": self.s_max,
            "per_decade": self.per_decade,
            "linear_points": self.n_linear,
        }


@dataclass(frozen=True)
class _Quantity:
    """
    [H^alpha F^phi]'(s) / denominator(s), compared as `kind` (sup or inf)
    """

    alpha: float
    phi: int
    denominator: Callable[[np.ndarray], np.ndarray]
    kind: str
    # A lower bound must be positive, except for plain monotonicity
    strictly_positive: bool = True


def _quantity(params: AssumptionParams, w: WeightPair) -> _Quantity:
    def one(s):
        return np.ones_like(s)

    def powers(*exponents):
        return lambda s: sum(w.eval_H(s) ** b for b in exponents)

    assumption = params.assumption
    if assumption == "hh-product":
        return _Quantity(params.gamma1 + 1, 0, one, UPPER)
    if assumption == "fh-product":
        return _Quantity(params.gamma1 + 1, 1, one, LOWER)
    if assumption == "unbounded-monotone":
        return _Quantity(params.p, 1, one, LOWER, strictly_positive=False)
    if assumption == "no-h-prime-1":
        return _Quantity(params.p1, 1, powers(params.q1), LOWER)
    if assumption == "no-h-prime-2":
        return _Quantity(params.gamma1 + 1, 0, powers(params.beta), UPPER)
    if assumption == "ext-no-h-prime-2":
        return _Quantity(
            params.gamma1 + 1, 0, powers(params.beta1, params.beta2), UPPER
        )
    return _Quantity(params.gamma1 + 1, 0, powers(*params.betas), UPPER)


def _closed_form_derivative(
    w: WeightPair,
    coeff: Coefficient,
    quantity: _Quantity,
) -> Optional[Callable[[np.ndarray], np.ndarray]]:
    """d/ds [H^alpha F^phi] when H (and F if needed) are monomials"""

    if not isinstance(w, MonomialMixin):
        return None
    c_H, e_H = w.monomial()
    c, e = c_H**quantity.alpha, e_H * quantity.alpha
    if quantity.phi:
        if not isinstance(coeff, MonomialMixin):
            return None
        # F = h a with h = H' = c_H e_H s^(e_H - 1)
        k, rho = coeff.monomial()
        c *= c_H * e_H * k
        e += e_H - 1 + rho
    return lambda s: c * e * s ** (e - 1)


def _evaluate(w, coeff, quantity, s) -> tuple[np.ndarray, bool]:
    """
    The sampled quantity on `s`, and whether the finite differences (if
    used) agree across step refinement.
    """
    derivative = _closed_form_derivative(w, coeff, quantity)
    consistent = True
    if derivative is not None:
        numerator = derivative(s)
    else:

        def product(x):
            value = w.eval_H(x) ** quantity.alpha
            if quantity.phi:
                value = value * w.eval_F(coeff, x)
            return value

        numerator, disagreement = central_difference(product, s)
        significant = np.abs(numerator) > 1e-8 * np.abs(numerator).max()
        threshold = settings.LAB["FD_DISAGREEMENT"]
        consistent = not (disagreement[significant] > threshold).any()
    return numerator / quantity.denominator(s), consistent


def _extremum(values: np.ndarray, kind: str) -> int:
    return int(np.argmax(values) if kind == UPPER else np.argmin(values))


def check_assumption(
    w: WeightPair,
    coeff: Coefficient,
    params: AssumptionParams,
    s_grid: Optional[AssumptionGrid] = None,
) -> ConditionReport:
    """
    Checks one structural assumption on the pair (H, F).

    The tightest constant (sup for upper bounds, inf for lower bounds) is
    computed on `s_grid` and on its refinement. An upper bound is violated
    when refinement more than doubles it; a lower bound when it is not
    positive or refinement halves it. A relative change below 1% is
    reported as satisfied, anything in between as inconclusive.

    Parameters
    ----------
    w: WeightPair
    coeff: Coefficient
    params: AssumptionParams
    s_grid: AssumptionGrid, optional
        Defaults to the log+linear grid over [1e-8, M] for the bounded
        assumptions and [1e-8, s_max] for the global ones

    Returns
    -------
    ConditionReport
        constants carry "c" (refined), "c_coarse" and "kind"
    """
    quantity = _quantity(params, w)
    grid = s_grid or AssumptionGrid(s_max=params.upper)
    refined = grid.refined(extend_upper=not params.bounded)

    coarse_s = grid.points()
    fine_s = refined.points()
    coarse, coarse_ok = _evaluate(w, coeff, quantity, coarse_s)
    fine, fine_ok = _evaluate(w, coeff, quantity, fine_s)

    c_coarse = float(coarse[_extremum(coarse, quantity.kind)])
    at = _extremum(fine, quantity.kind)
    c_fine = float(fine[at])
    constants = {
        "c": c_fine,
        "c_coarse": c_coarse,
        "kind": quantity.kind,
        "closed_form": _closed_form_derivative(w, coeff, quantity)
        is not None,
    }
    spec = {**grid.to_dict(), "refined": refined.to_dict()}
    change = abs(c_fine - c_coarse) / max(abs(c_coarse), 1e-300)

    if not (coarse_ok and fine_ok):
        logger.warning(
            "%s: finite differences disagree across step refinement",
            params.assumption,
        )
        return ConditionReport(
            params.assumption, Verdict.INCONCLUSIVE, constants, grid=spec
        )

    bound = None
    if quantity.kind == UPPER:
        if not np.isfinite(c_fine) or c_fine > 2 * c_coarse:
            bound = 2 * c_coarse
    elif quantity.strictly_positive:
        if c_fine <= 0:
            bound = 0.0
        elif c_fine < 0.5 * c_coarse:
            bound = 0.5 * c_coarse
    elif c_fine < -1e-12 * np.abs(fine).max():
        bound = 0.0

    if bound is not None:
        witness = {
            "s": float(fine_s[at]),
            "value": c_fine,
            "bound": bound,
        }
        logger.info(
            "%s violated at s=%g for %s, %s",
            params.assumption,
            witness["s"],
            w,
            coeff,
        )
        return ConditionReport(
            params.assumption,
            Verdict.VIOLATED,
            constants,
            witness=witness,
            grid=spec,
        )

    # A plain monotonicity bound only has to hold
    if change <= REFINEMENT_RTOL or not quantity.strictly_positive:
        return ConditionReport(
            params.assumption, Verdict.SATISFIED, constants, grid=spec
        )
    logger.warning(
        "%s: constant moves by %.3g under refinement",
        params.assumption,
        change,
    )
    return ConditionReport(
        params.assumption, Verdict.INCONCLUSIVE, constants, grid=spec
    )
