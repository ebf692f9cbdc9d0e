"""
Improper integral I(s) = int_s^inf dtau / (tau a(tau))
"""
import logging
import math
from typing import NamedTuple, Optional

import numpy as np
from django.conf import settings

from core.exceptions import DivergenceError, DomainError
from core.utils import integrate_segment

from .models import Coefficient

logger = logging.getLogger(__name__)


class QuadratureResult(NamedTuple):
    value: float
    error: float


def eval_I(
    coeff: Coefficient,
    s: float,
    tol: Optional[float] = None,
) -> QuadratureResult:
    """
    Computes I(s) to relative accuracy `tol`.

    With tau = e^x the integral becomes int_{ln s}^inf dx / a(e^x). The
    part below tau = 1 is one finite segment; the tail above
    max(s, 1) is integrated over windows of doubling width until a window
    contributes less than `tol` relative to the running sum.

    Parameters
    ----------
    coeff: Coefficient
        The diffusion coefficient
    s: float
        Lower limit, must be > 0
    tol: float, optional
        Relative accuracy, defaults to `settings.LAB["QUAD_TOL"]`

    Returns
    -------
    QuadratureResult
        The value and an absolute error estimate

    Raises
    ------
    DomainError
        If s <= 0
    DivergenceError
        If the tail has not converged after the maximum number of doublings
    """
    if not s > 0:
        raise DomainError(f"I(s) is only defined for s > 0, got {s}")
    tol = tol or settings.LAB["QUAD_TOL"]
    max_doublings = settings.LAB["QUAD_MAX_DOUBLINGS"]

    def integrand(x: float) -> float:
        with np.errstate(over="ignore"):
            tau = float(np.exp(x))
        return 1.0 / coeff.eval_a(tau)

    kinks = [math.log(b) for b in coeff.breakpoints() if b > 0]
    x_s = math.log(s)

    total, error = 0.0, 0.0
    if x_s < 0:
        total, error, converged = integrate_segment(
            integrand, x_s, 0.0, tol, kinks
        )
        if not converged:
            raise DivergenceError(
                f"I({s}) did not converge below tau = 1",
                partial_sum=total,
                upper_limit=0.0,
            )

    start = max(x_s, 0.0)
    lower, width = start, 1.0
    for doubling in range(max_doublings + 1):
        upper = start + width
        value, err, converged = integrate_segment(
            integrand, lower, upper, tol, kinks
        )
        total += value
        error += err
        if not converged or not math.isfinite(total):
            break
        if abs(value) <= tol * abs(total):
            logger.debug(
                "I(%g) = %.16g after %d tail windows", s, total, doubling + 1
            )
            return QuadratureResult(total, error + abs(value))
        lower, width = upper, 2 * width

    raise DivergenceError(
        f"I({s}) did not converge: the tail of 1/(tau a(tau)) decays too "
        f"slowly (partial sum {total:.6g} up to tau = e^{lower:.6g})",
        partial_sum=total,
        upper_limit=lower,
    )


def eval_aI(
    coeff: Coefficient,
    s: np.ndarray,
    tol: Optional[float] = None,
) -> np.ndarray:
    """a(s) I(s) on every point of `s`"""

    s = np.asarray(s, dtype=float)
    return np.array(
        [coeff.eval_a(x) * eval_I(coeff, x, tol).value for x in s]
    )
