"""
Contains the checks of sampled functionals against decay envelopes and
differential inequalities
"""
import logging
from typing import Optional, Sequence

import numpy as np

from core.exceptions import DomainError, ParameterError
from core.utils import linear_fit

from .envelopes import envelope_value
from .models import (
    DecayEnvelope,
    EnvelopeReport,
    FunctionalSeries,
    OdiParams,
    OdiReport,
)

logger = logging.getLogger(__name__)

# Increase of Y, relative to Y(t0), still counted as nonincreasing
MONOTONE_RTOL = 1e-10


def _tail_exponent(series: FunctionalSeries, t0: float) -> Optional[float]:
    elapsed = series.times - t0
    last = elapsed[-1]
    if last <= 0:
        return None
    tail = (elapsed >= last / 10) & (elapsed > 0) & (series.values > 0)
    if tail.sum() < 2:
        return None
    fit = linear_fit(np.log(elapsed[tail]), np.log(series.values[tail]))
    return fit["slope"]


def _zero_persistent(values: np.ndarray) -> bool:
    zero = np.flatnonzero(values == 0)
    return zero.size == 0 or bool((values[zero[0] :] == 0).all())


def _dominance(
    series: FunctionalSeries, bound, slack: float
) -> Optional[dict]:
    failing = np.flatnonzero(series.values > (1 + slack) * bound)
    if not failing.size:
        return None
    i = int(failing[0])
    witness = {
        "t": float(series.times[i]),
        "value": float(series.values[i]),
        "bound": float((1 + slack) * bound[i]),
    }
    logger.info(
        "Envelope dominance fails at t=%g (%.6e > %.6e)",
        witness["t"],
        witness["value"],
        witness["bound"],
    )
    return witness


def _envelope_report(
    series: FunctionalSeries, witness: Optional[dict], slack: float, t0
) -> EnvelopeReport:
    values = series.values
    allowance = MONOTONE_RTOL * values[0]
    rising = np.flatnonzero(np.diff(values) > allowance)
    violations = [float(series.times[i + 1]) for i in rising]
    if violations:
        logger.warning("Y increases at %d samples", len(violations))

    return EnvelopeReport(
        dominated=witness is None,
        slack=slack,
        witness=witness,
        monotone=not violations,
        monotonicity_violations=violations,
        tail_exponent=_tail_exponent(series, t0),
        zero_persistent=_zero_persistent(values),
    )


def verify_envelope(
    series: FunctionalSeries, env: DecayEnvelope, slack: float = 0.0
) -> EnvelopeReport:
    """
    Checks Y_i <= (1 + slack) envelope(t_i) at every sample, together
    with the monotonicity of Y, its fitted tail exponent, and that Y stays
    0 once it reaches 0.

    Raises
    ------
    DomainError
        If the series starts before the envelope's t0
    """
    if not slack >= 0:
        raise ParameterError(f"Slack must be >= 0: {slack}")
    if series.times[0] < env.t0:
        raise DomainError(f"Series starts before t0 = {env.t0}")

    witness = _dominance(series, envelope_value(env, series.times), slack)
    return _envelope_report(series, witness, slack, env.t0)


def verify_comparison(
    series: FunctionalSeries, comparison: FunctionalSeries, slack: float = 0.0
) -> EnvelopeReport:
    """
    As verify_envelope, with the bound given by a sampled comparison
    solution such as the one of generalized_odi_envelope.

    Raises
    ------
    DomainError
        If the comparison is not sampled at the series times
    """
    if not slack >= 0:
        raise ParameterError(f"Slack must be >= 0: {slack}")
    if comparison.times.shape != series.times.shape or not np.allclose(
        comparison.times, series.times
    ):
        raise DomainError("The comparison must be sampled at the Y times")
    witness = _dominance(series, comparison.values, slack)
    return _envelope_report(series, witness, slack, series.times[0])


def _rate_weight(
    params: OdiParams, z_series: Sequence[FunctionalSeries], times
) -> np.ndarray:
    """1 or [sum of Z_i + 1]^-((2 - delta2)/delta2)"""

    if len(z_series) != params.z_count:
        raise ParameterError(
            f"Theorem '{params.theorem}' needs {params.z_count} "
            f"Z series, got {len(z_series)}"
        )
    if not params.z_count:
        return np.ones_like(times)
    total = np.zeros_like(times)
    for z in z_series:
        if z.times.shape != times.shape or not np.allclose(z.times, times):
            raise DomainError("Z series must be sampled at the Y times")
        total = total + z.values
    return (total + 1) ** (-params.weight_exponent)


def verify_odi(
    series: FunctionalSeries,
    params: OdiParams,
    z_series: Sequence[FunctionalSeries] = (),
    slack: float = 0.0,
) -> OdiReport:
    """
    Checks dY/dt + rate W Y^e <= slack max|dY/dt| at the interior samples.

    dY/dt is a second order centered difference of the samples; each
    sample is granted an extra 0.5 dt |Y''| for the discretization, with
    Y'' from second differences. The rate is `params.rate` in analytic
    mode, otherwise the measured minimal rate min(-dY/dt / (W Y^e)),
    which fails the check unless it is positive.

    Raises
    ------
    DomainError
        With fewer than 3 samples
    """
    if len(series) < 3:
        raise DomainError("At least 3 samples are needed to differentiate")
    if not slack >= 0:
        raise ParameterError(f"Slack must be >= 0: {slack}")

    t, Y = series.times, series.values
    W = _rate_weight(params, z_series, t)
    dY = np.gradient(Y, t)
    d2Y = np.gradient(dY, t)
    G = W * Y**params.exponent

    interior = slice(1, len(series) - 1)
    spacing = np.maximum(np.diff(t)[:-1], np.diff(t)[1:])
    allowance = 0.5 * spacing * np.abs(d2Y[interior])
    dY_in, G_in = dY[interior], G[interior]

    positive = np.flatnonzero(G_in > 0)
    measured = None
    if positive.size:
        rates = -dY_in[positive] / G_in[positive]
        measured = float(rates.min())

    rate = params.rate if params.rate_mode == OdiParams.ANALYTIC else measured
    scale = float(np.max(np.abs(dY)))
    lhs = dY_in + (rate or 0.0) * G_in
    excess = lhs - slack * scale - allowance
    worst = int(np.argmax(excess))
    holds = bool(excess[worst] <= 0)
    witness = None
    if params.rate_mode == OdiParams.FITTED and measured is not None:
        # A fitted rate has to be a decay rate
        if measured <= 0:
            holds = False
            slowest = int(positive[rates.argmin()])
            witness = {
                "t": float(t[1 + slowest]),
                "value": float(dY_in[slowest]),
                "bound": 0.0,
            }
    if not holds and witness is None:
        witness = {
            "t": float(t[1 + worst]),
            "value": float(lhs[worst]),
            "bound": float(slack * scale + allowance[worst]),
        }
    if not holds:
        logger.info("ODI fails at t=%g", witness["t"])

    return OdiReport(
        theorem=params.theorem,
        exponent=params.exponent,
        rate=rate,
        measured_rate=measured,
        holds=holds,
        max_excess=float(excess[worst]),
        slack=slack,
        witness=witness,
    )


def z_bound(
    series_p_star: FunctionalSeries,
    p0: float,
    p_star: float,
    domain_measure: float,
) -> np.ndarray:
    """
    Hoelder bound on Z = int H^p0 from Y* = int H^(1 + p_star):
    Z(t) <= Y*(t)^(p0/(1 + p_star)) |Omega|^((1 + p_star - p0)/(1 + p_star))
    """
    if not 0 < p0 <= 1 + p_star:
        raise ParameterError("The bound needs 0 < p0 <= 1 + p_star")
    if not domain_measure > 0:
        raise ParameterError("The domain measure must be > 0")
    power = 1 + p_star
    return series_p_star.values ** (p0 / power) * domain_measure ** (
        (power - p0) / power
    )
