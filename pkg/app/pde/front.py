"""
Detection of the propagation front of a trajectory
"""
import logging
from typing import Optional

import numpy as np
from django.conf import settings

from core.exceptions import DomainError, ParameterError

from .models import FrontReport, Trajectory
from .models.front_report import FINITE_SPEED, IMMEDIATE_POSITIVITY

logger = logging.getLogger(__name__)


def _support_hull(x: np.ndarray, u: np.ndarray, threshold: float):
    above = np.flatnonzero(u >= threshold)
    if above.size == 0:
        return None
    return [float(x[above[0]]), float(x[above[-1]])]


def detect_front(
    traj: Trajectory,
    ball: tuple,
    epsilon: float,
    eps_supp: Optional[float] = None,
    decades: Optional[int] = None,
) -> FrontReport:
    """
    Measures how long the shrunk ball eps B stays void.

    T' is the first output time at which u >= eps_supp somewhere on
    eps B (t_end when that never happens). The measurement is repeated
    for the thresholds eps_supp 10^k, k < decades. The verdict is
    immediate positivity when every threshold is already reached at the
    first output time after t = 0.

    Parameters
    ----------
    traj: Trajectory
    ball: tuple
        (lo, hi) of the ball B, inside the mesh
    epsilon: float
        Shrinking factor in (0, 1)
    eps_supp: float, optional
        Support threshold, defaults to SUPPORT_THRESHOLD max(u0)
    decades: int, optional
        Number of thresholds, defaults to SUPPORT_DECADES

    Returns
    -------
    FrontReport

    Raises
    ------
    DomainError
        If B is not inside the mesh or u0 does not vanish on B
    """
    lo, hi = float(ball[0]), float(ball[1])
    mesh = traj.mesh
    if not mesh.contains(lo, hi):
        raise DomainError(
            f"Ball [{lo}, {hi}] is not inside [{mesh.x_lo}, {mesh.x_hi}]"
        )
    if not 0 < epsilon < 1:
        raise ParameterError(f"epsilon must lie in (0, 1): {epsilon}")
    decades = decades or settings.LAB["SUPPORT_DECADES"]

    if eps_supp is None:
        scale = traj.states[0].max() or traj.states.max()
        eps_supp = settings.LAB["SUPPORT_THRESHOLD"] * (scale or 1.0)
    if not eps_supp > 0:
        raise ParameterError(f"Support threshold must be positive: {eps_supp}")

    x = mesh.nodes
    in_ball = (x >= lo) & (x <= hi)
    if traj.states[0][in_ball].max(initial=0.0) >= eps_supp:
        raise DomainError("Initial data must vanish on the ball B")

    center, radius = (lo + hi) / 2, (hi - lo) / 2
    shrunk = (center - epsilon * radius, center + epsilon * radius)
    in_shrunk = (x >= shrunk[0]) & (x <= shrunk[1])
    if not in_shrunk.any():
        raise DomainError("The shrunk ball contains no mesh node")
    peak = traj.states[:, in_shrunk].max(axis=1)

    thresholds = [eps_supp * 10**k for k in range(decades)]
    t_primes, supports = [], []
    for threshold in thresholds:
        reached = np.flatnonzero(peak >= threshold)
        t_primes.append(
            float(traj.times[reached[0]]) if reached.size else traj.t_end
        )
        supports.append(
            [_support_hull(x, u, threshold) for u in traj.states]
        )

    immediate = traj.times.size > 1 and all(
        t == traj.times[1] for t in t_primes
    )
    verdict = IMMEDIATE_POSITIVITY if immediate else FINITE_SPEED
    logger.info("Front on [%g, %g]: T' = %g, %s", lo, hi, t_primes[0], verdict)
    return FrontReport(
        ball=(lo, hi),
        shrunk_ball=shrunk,
        epsilon=float(epsilon),
        thresholds=thresholds,
        t_prime=t_primes[0],
        t_prime_by_threshold=t_primes,
        supports=supports,
        verdict=verdict,
    )
