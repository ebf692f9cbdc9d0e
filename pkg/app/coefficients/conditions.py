"""
Contains the numeric checkers of the finite propagation speed conditions
on a coefficient: boundedness of a(s)I(s) near 0 and at infinity, and
the quasi-monotonicity of a(s)I(s)^mu.
"""
import logging
from typing import Iterable, Optional

import numpy as np
from django.conf import settings

from core.exceptions import DomainError, ParameterError
from core.models import ConditionReport, Verdict
from core.utils import linear_fit, log_grid

from .models import Coefficient
from .quadrature import eval_aI, eval_I

logger = logging.getLogger(__name__)

TOWARD_ZERO = "zero"
TOWARD_INFINITY = "infinity"

# Default sampling of the test2 pairs s < v
TEST2_S_RANGE = (1e-8, 0.9)
TEST2_C_MIN = 1e-8


def _require_degenerate(coeff: Coefficient) -> None:
    if not coeff.degenerate:
        raise DomainError(
            f"Condition checks need a(0) = 0 and a(s) > 0 for s > 0, "
            f"the '{coeff.family}' family is not degenerate"
        )


def _grid_spec(grid: np.ndarray, **extra) -> dict:
    return {
        "kind": "log",
        "min": float(grid.min()),
        "max": float(grid.max()),
        "points": int(grid.size),
        **extra,
    }


def _limsup_report(
    condition: str,
    coeff: Coefficient,
    grid: np.ndarray,
    toward: str,
    tol: Optional[float],
) -> ConditionReport:
    """
    Shared three-way limsup estimate of a(s)I(s) as s approaches one end
    of `grid`.

    The sup over the last sampled decade is compared with the sup over
    the decade before it. If the relative change is below
    `STABILIZATION_RTOL` the sequence is reported bounded. If instead
    a(s)I(s) grows strictly over the last `GROWTH_DECADES` decades, the
    condition is reported violated with a growth fit against |ln s|.
    """
    rtol = settings.LAB["STABILIZATION_RTOL"]
    growth_decades = settings.LAB["GROWTH_DECADES"]

    # Order the samples so the approached end comes last
    grid = np.sort(np.asarray(grid, dtype=float))
    if toward == TOWARD_ZERO:
        grid = grid[::-1]
    values = eval_aI(coeff, grid, tol)

    distance = np.abs(np.log10(grid) - np.log10(grid[-1]))
    last = distance <= 1
    previous = (distance > 1) & (distance <= 2)
    spec = _grid_spec(grid, toward=toward)
    if not previous.any():
        raise ParameterError("The sampling grid must span at least 2 decades")

    sup_last = float(values[last].max())
    sup_previous = float(values[previous].max())
    change = abs(sup_last - sup_previous) / max(abs(sup_previous), 1e-300)
    constants = {
        "limsup": sup_last,
        "previous_decade_sup": sup_previous,
        "relative_change": change,
    }

    if change < rtol:
        logger.info(
            "%s: a(s)I(s) stabilizes at %.10g for %s",
            condition,
            sup_last,
            coeff,
        )
        return ConditionReport(
            condition, Verdict.SATISFIED, constants=constants, grid=spec
        )

    window = distance <= growth_decades
    spans_window = distance.max() >= growth_decades
    if spans_window and (np.diff(values[window]) > 0).all():
        log_s = np.abs(np.log(grid[window]))
        constants["growth"] = linear_fit(log_s, values[window])
        start = int(np.argmax(window))
        witness = {
            "s": float(grid[-1]),
            "value": float(values[-1]),
            "bound": float(values[start]),
            "bound_s": float(grid[start]),
        }
        logger.info(
            "%s: a(s)I(s) grows over %d decades for %s",
            condition,
            growth_decades,
            coeff,
        )
        return ConditionReport(
            condition,
            Verdict.VIOLATED,
            constants=constants,
            witness=witness,
            grid=spec,
        )

    logger.warning(
        "%s: neither stabilization nor monotone growth for %s",
        condition,
        coeff,
    )
    return ConditionReport(
        condition, Verdict.INCONCLUSIVE, constants=constants, grid=spec
    )


def check_test1(
    coeff: Coefficient,
    s_grid: Optional[Iterable[float]] = None,
    tol: Optional[float] = None,
) -> ConditionReport:
    """
    Checks limsup_{s -> 0} a(s)I(s) < inf.

    Parameters
    ----------
    coeff: Coefficient
        A degenerate coefficient
    s_grid: iterable of float, optional
        Log-spaced sampling points, must reach s = 1e-8. Defaults to ten
        points per decade on [1e-12, 1].
    tol: float, optional
        Quadrature tolerance

    Returns
    -------
    ConditionReport

    Raises
    ------
    DomainError
        If the coefficient is not degenerate
    ParameterError
        If the grid stops above 1e-8
    """
    _require_degenerate(coeff)
    if s_grid is None:
        grid = log_grid(1e-12, 1.0)
    else:
        grid = np.asarray(list(s_grid), dtype=float)
        if (grid <= 0).any():
            raise ParameterError("Sampling points must be positive")
    if grid.min() > 1e-8:
        raise ParameterError(
            f"The grid must extend down to s = 1e-8, stops at {grid.min()}"
        )
    return _limsup_report("test1", coeff, grid, TOWARD_ZERO, tol)


def check_at_infinity(
    coeff: Coefficient,
    s_grid: Optional[Iterable[float]] = None,
    tol: Optional[float] = None,
) -> ConditionReport:
    """Checks limsup_{s -> inf} a(s)I(s) < inf on s in [1, 1e6]"""

    _require_degenerate(coeff)
    if s_grid is None:
        grid = log_grid(1.0, 1e6)
    else:
        grid = np.asarray(list(s_grid), dtype=float)
    return _limsup_report("at-infinity", coeff, grid, TOWARD_INFINITY, tol)


def growth_fit(
    coeff: Coefficient,
    n_range: Iterable[int] = range(8, 29),
    tol: Optional[float] = None,
) -> dict:
    """
    Least squares fit a(s)I(s) ~ c |ln s| + d at s = e^-n.

    Returns
    -------
    dict
        {"slope": c, "intercept": d, "r_squared": R^2, "n": [...],
        "values": [...]}
    """
    n = np.asarray(list(n_range), dtype=float)
    values = eval_aI(coeff, np.exp(-n), tol)
    fit = linear_fit(n, values)
    fit["n"] = n.tolist()
    fit["values"] = values.tolist()
    return fit


def _log_ratio_terms(coeff, grid, tol):
    log_a = np.log(coeff.eval_a(grid))
    log_I = np.log([eval_I(coeff, s, tol).value for s in grid])
    return log_a, log_I


def _min_ratio(log_r: np.ndarray) -> tuple[float, int, int]:
    """
    min over i < j of exp(log_r[i] - log_r[j]) for an ascending grid,
    with the pair (i, j) realizing it.
    """
    # suffix[i] = argmax of log_r over indices > i
    n = log_r.size
    suffix = np.empty(n - 1, dtype=int)
    best = n - 1
    for i in range(n - 2, -1, -1):
        suffix[i] = best
        if log_r[i] > log_r[best]:
            best = i
    gaps = log_r[:-1] - log_r[suffix]
    i = int(np.argmin(gaps))
    return float(np.exp(gaps[i])), i, int(suffix[i])


def check_test2(
    coeff: Coefficient,
    mu_grid: Iterable[float],
    s_range: tuple[float, float] = TEST2_S_RANGE,
    c_min: float = TEST2_C_MIN,
    tol: Optional[float] = None,
) -> ConditionReport:
    """
    Checks a(s)I(s)^mu >= c a(v)I(v)^mu for 0 < s < v < 1.

    For every mu, c_hat(mu) is the smallest sampled ratio over pairs
    s < v. It is computed on a grid over `s_range` and again on a refined
    grid reaching s_lo^2 with twice the density. A mu is adequate when
    the refined c_hat stays above `c_min` and above half the coarse
    value. The report selects the smallest adequate mu.

    Returns
    -------
    ConditionReport
        constants carry "c", "mu" and the per-mu "table"
    """
    _require_degenerate(coeff)
    mus = sorted(float(mu) for mu in mu_grid)
    if not mus:
        raise ParameterError("At least one candidate exponent is required")
    if any(mu <= 0 for mu in mus):
        raise ParameterError("Candidate exponents mu must be positive")
    s_lo, s_hi = s_range
    if not 0 < s_lo < s_hi < 1:
        raise ParameterError("Sampling region must satisfy 0 < s < v < 1")

    coarse = log_grid(s_lo, s_hi)
    fine = log_grid(s_lo**2, s_hi, per_decade=20)
    coarse_terms = _log_ratio_terms(coeff, coarse, tol)
    fine_terms = _log_ratio_terms(coeff, fine, tol)

    table = []
    for mu in mus:
        c_coarse, _, _ = _min_ratio(coarse_terms[0] + mu * coarse_terms[1])
        c_fine, i, j = _min_ratio(fine_terms[0] + mu * fine_terms[1])
        table.append(
            {
                "mu": mu,
                "c_coarse": c_coarse,
                "c_refined": c_fine,
                "adequate": c_fine >= c_min and c_fine >= 0.5 * c_coarse,
                "pair": (float(fine[i]), float(fine[j])),
            }
        )

    spec = {
        "kind": "log",
        "min": float(fine.min()),
        "max": float(fine.max()),
        "points": int(fine.size),
        "coarse_points": int(coarse.size),
    }
    rows = [
        {k: row[k] for k in ("mu", "c_coarse", "c_refined", "adequate")}
        for row in table
    ]

    adequate = [row for row in table if row["adequate"]]
    if adequate:
        best = adequate[0]
        return ConditionReport(
            "test2",
            Verdict.SATISFIED,
            constants=_test2_constants(best, rows),
            grid=spec,
        )

    best = max(table, key=lambda row: row["c_refined"])
    if all(row["c_refined"] < c_min for row in table):
        s, v = best["pair"]
        witness = {
            "s": s,
            "v": v,
            "mu": best["mu"],
            "value": best["c_refined"],
            "bound": c_min,
        }
        return ConditionReport(
            "test2",
            Verdict.VIOLATED,
            constants=_test2_constants(best, rows),
            witness=witness,
            grid=spec,
        )

    logger.warning("test2: no candidate mu is stable under refinement")
    return ConditionReport(
        "test2",
        Verdict.INCONCLUSIVE,
        constants=_test2_constants(best, rows),
        grid=spec,
    )


def _test2_constants(best: dict, rows: list) -> dict:
    return {"c": best["c_refined"], "mu": best["mu"], "table": rows}
