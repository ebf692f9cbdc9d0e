"""
Closed-form decay envelopes of Y' + k Y^beta <= 0, their rates for the
basic and bounded models, and numeric comparison envelopes.
"""
import logging
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np
from django.conf import settings
from scipy import integrate

from core.exceptions import DomainError, ParameterError

from .models import DecayEnvelope, FunctionalSeries

logger = logging.getLogger(__name__)


class Rate(NamedTuple):
    k: float
    beta: float


def envelope_value(env: DecayEnvelope, t):
    """
    [k (beta - 1)(t - t0) + Y0^-(beta - 1)]^(-1/(beta - 1)), identically 0
    when Y0 = 0. Accepts a scalar or an array of times.

    Raises
    ------
    DomainError
        If any t < t0
    """
    times = np.asarray(t, dtype=float)
    if (times < env.t0).any():
        raise DomainError(f"Envelope is defined for t >= {env.t0}")
    if env.Y0 == 0:
        values = np.zeros_like(times)
    else:
        power = env.beta - 1
        base = env.k * power * (times - env.t0) + env.Y0 ** (-power)
        values = base ** (-1 / power)
    return float(values) if values.ndim == 0 else values


def ode_comparison(
    env: DecayEnvelope,
    t_end: float,
    tol: Optional[float] = None,
    n_samples: int = 2001,
) -> float:
    """
    Integrates Y' = -k Y^beta from (t0, Y0) with an adaptive Runge-Kutta
    pair and returns the max relative gap to the closed-form envelope over
    the dense output.
    """
    if not env.Y0 > 0:
        raise DomainError("The comparison equation needs Y0 > 0")
    if not t_end > env.t0:
        raise DomainError(f"t_end must exceed t0 = {env.t0}")
    rtol = tol or settings.LAB["ODE_RTOL"]

    solution = integrate.solve_ivp(
        lambda t, y: -env.k * np.maximum(y, 0.0) ** env.beta,
        (env.t0, t_end),
        [env.Y0],
        method="RK45",
        rtol=rtol,
        atol=rtol * 1e-3 * env.Y0,
        dense_output=True,
    )
    times = np.linspace(env.t0, t_end, n_samples)
    numeric = solution.sol(times)[0]
    exact = envelope_value(env, times)
    gap = float(np.max(np.abs(numeric - exact) / exact))
    logger.debug("Envelope vs integrator: max relative gap %.3e", gap)
    return gap


def analytic_rate_basic(K: float, gamma: float, m: float, c0: float) -> Rate:
    """
    Rate of Y' + k1 Y^((m + gamma)/m) <= 0 for Y = int u^m under
    (u^(1 - gamma))_t = K Laplacian(u),
    k1 = 4 K m (m + gamma - 1) / (c0^2 (1 - gamma) (m + gamma)^2).

    Raises
    ------
    ParameterError
        Unless 0 < gamma < 1, m >= 2 - gamma and K, c0 > 0
    """
    if not 0 < gamma < 1:
        raise ParameterError(
            f"gamma must lie in (0, 1), got {gamma} "
            "(gamma = 0 is the heat equation)"
        )
    if not m >= 2 - gamma:
        raise ParameterError(f"m must be >= 2 - gamma, got {m}")
    if not (K > 0 and c0 > 0):
        raise ParameterError("K and c0 must be > 0")
    k1 = 4 * K * m * (m + gamma - 1) / (c0**2 * (1 - gamma) * (m + gamma) ** 2)
    return Rate(k1, (m + gamma) / m)


def bounded_rate(
    p: float, gamma1: float, c1: float, c2: float, c0: float
) -> Rate:
    """
    Rate of Y' + k Y^((p + gamma1 + 1)/(p + 1)) <= 0 for Y = int H^(p+1)
    under the bounded product assumptions with constants c1, c2:
    k = c2 (p + 1)/(c1 K1), K1 = c0^2 gamma1^2/((gamma1 + 1)^2 (2 - q)^2),
    q = (2p + 2)/(p + gamma1 + 1).
    """
    if not (p >= 0 and gamma1 > 0):
        raise ParameterError("Need p >= 0 and gamma1 > 0")
    if not (c1 > 0 and c2 > 0 and c0 > 0):
        raise ParameterError("c1, c2 and c0 must be > 0")
    q = (2 * p + 2) / (p + gamma1 + 1)
    K1 = c0**2 * gamma1**2 / ((gamma1 + 1) ** 2 * (2 - q) ** 2)
    return Rate(c2 * (p + 1) / (c1 * K1), 2 / q)


# Named nonlinearities of the comparison equation Y' = -rate(Y)
COMPARISONS = ("power", "log")


def comparison_rate(
    nonlinearity: str, k: float, beta: Optional[float] = None
) -> Callable[[float], float]:
    """
    k y^beta ("power") or k y |ln y| ("log"), both 0 at y = 0

    Raises
    ------
    ParameterError
        For an unknown nonlinearity, k <= 0, or a power without beta > 1
    """
    if not k > 0:
        raise ParameterError(f"Comparison rate k must be > 0: {k}")
    if nonlinearity == "power":
        if beta is None or not beta > 1:
            raise ParameterError("A power comparison needs beta > 1")

        def power(y):
            return k * y**beta

        return power
    if nonlinearity == "log":

        def log(y):
            return k * y * abs(np.log(y)) if y > 0 else 0.0

        return log
    raise ParameterError(f"Unknown comparison nonlinearity: {nonlinearity}")


def generalized_odi_envelope(
    rate_fn: Callable[[float], float],
    Y0: float,
    t_end: float,
    t0: float = 0.0,
    n_samples: int = 201,
    times: Optional[Sequence[float]] = None,
) -> FunctionalSeries:
    """
    Solution of the comparison equation Y' = -rate_fn(Y), Y(t0) = Y0,
    sampled at `times` in [t0, t_end], or at `n_samples` equally spaced
    times.

    Raises
    ------
    DomainError
        If rate_fn(0) != 0 or rate_fn is negative on [0, Y0]
    """
    if not Y0 >= 0:
        raise ParameterError(f"Y0 must be >= 0: {Y0}")
    if rate_fn(0.0) != 0:
        raise DomainError("The comparison nonlinearity must vanish at 0")
    sampled = np.array([rate_fn(y) for y in np.linspace(0.0, Y0, 257)])
    if (sampled < 0).any():
        raise DomainError("The comparison nonlinearity is negative")
    if (np.diff(sampled) < 0).any():
        logger.warning("Comparison nonlinearity is not nondecreasing")

    rtol = settings.LAB["ODE_RTOL"]
    solution = integrate.solve_ivp(
        lambda t, y: [-rate_fn(max(float(y[0]), 0.0))],
        (t0, t_end),
        [Y0],
        method="RK45",
        rtol=rtol,
        atol=rtol * 1e-3 * max(Y0, 1e-300),
        dense_output=True,
    )
    if times is None:
        times = np.linspace(t0, t_end, n_samples)
    times = np.asarray(times, dtype=float)
    if (times < t0).any() or (times > t_end).any():
        raise DomainError(f"Sample times must lie in [{t0}, {t_end}]")
    values = np.maximum(solution.sol(times)[0], 0.0)
    return FunctionalSeries(
        times, values, {"comparison": getattr(rate_fn, "__name__", "")}
    )
