"""
Numerical helpers shared by the apps: grids, quadrature, differences, fits
"""
import logging
from typing import Callable, Iterable, Optional

import numpy as np
from scipy import integrate, stats

logger = logging.getLogger(__name__)

# QUADPACK refuses relative tolerances below 50 * machine epsilon
_MIN_EPSREL = 1e-13


def log_grid(lo: float, hi: float, per_decade: int = 10) -> np.ndarray:
    """Log-spaced grid from `lo` to `hi` (both included), sorted ascending"""

    if lo <= 0 or hi <= lo:
        raise ValueError(f"Invalid log grid bounds: [{lo}, {hi}]")
    decades = np.log10(hi) - np.log10(lo)
    n = max(int(np.ceil(decades * per_decade)) + 1, 2)
    return np.logspace(np.log10(lo), np.log10(hi), n)


def integrate_segment(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    points: Optional[Iterable[float]] = None,
) -> tuple[float, float, bool]:
    """
    Adaptive Gauss-Kronrod quadrature of `f` over the finite segment [a, b].

    Returns
    -------
    tuple
        (value, absolute error estimate, converged)
    """
    if a == b:
        return 0.0, 0.0, True

    kwargs = {}
    if points is not None:
        inner = sorted(p for p in points if a < p < b)
        if inner:
            kwargs["points"] = inner

    result = integrate.quad(
        f,
        a,
        b,
        epsabs=0.0,
        epsrel=max(tol, _MIN_EPSREL),
        limit=200,
        full_output=1,
        **kwargs,
    )
    # A fourth element (the message) is only appended on failure
    value, error = result[0], result[1]
    converged = len(result) == 3 and np.isfinite(value)
    if not converged:
        logger.debug(
            "Quadrature on [%g, %g] did not converge: %s",
            a,
            b,
            result[-1],
        )
    return value, error, converged


def central_difference(
    g: Callable[[np.ndarray], np.ndarray],
    s: np.ndarray,
    rel_step: float = 1e-3,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Central differences of `g` at s > 0 with steps h and h/2 (h relative
    to s), combined by Richardson extrapolation.

    Returns
    -------
    tuple
        (extrapolated derivative, relative disagreement between the two
        step sizes)
    """
    s = np.asarray(s, dtype=float)
    h = rel_step * s
    coarse = (g(s + h) - g(s - h)) / (2 * h)
    fine = (g(s + h / 2) - g(s - h / 2)) / h
    extrapolated = (4 * fine - coarse) / 3
    scale = np.maximum(np.abs(fine), np.finfo(float).tiny)
    return extrapolated, np.abs(coarse - fine) / scale


def linear_fit(x: np.ndarray, y: np.ndarray) -> dict:
    """Least squares line y = slope * x + intercept with its R^2"""

    fit = stats.linregress(x, y)
    return {
        "slope": float(fit.slope),
        "intercept": float(fit.intercept),
        "r_squared": float(fit.rvalue**2),
    }


def trapezoid(values: np.ndarray, x: np.ndarray, axis: int = -1):
    """Trapezoid rule, kept in one place for every space/time quadrature"""

    return integrate.trapezoid(values, x, axis=axis)
