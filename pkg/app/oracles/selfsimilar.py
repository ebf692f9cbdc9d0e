"""
Evaluation, residual and sampling of the self-similar solution
"""
import logging
from typing import Iterable, NamedTuple

import numpy as np

from coefficients.models import Coefficient, CounterexampleCoefficient
from core.exceptions import DomainError, ParameterError
from pde.models import Mesh, Trajectory

from .models import SelfSimilarSample, SelfSimilarSolution

logger = logging.getLogger(__name__)

# Margin kept above the splice point when sampling residuals
RESIDUAL_MARGIN = 1.2


class Residual(NamedTuple):
    absolute: float
    relative: float


def eval_selfsimilar(sol: SelfSimilarSolution, x, t) -> SelfSimilarSample:
    """
    u, u_t and Lap u at radius |x| (scalars or broadcastable arrays).

    Raises
    ------
    DomainError
        If t <= 0
    """
    return sol.evaluate(x, t)


def residual(
    sol: SelfSimilarSolution,
    coeff: Coefficient,
    r,
    t,
) -> Residual:
    """
    max |u_t - a(u) Lap u| over the sample points, absolute and relative
    to max(|u_t|, |a(u) Lap u|).

    Raises
    ------
    ParameterError
        If `coeff` is not the counter-example coefficient of (lam, N)
    DomainError
        If a sample lies outside 0 < t < 1, s > s_splice
    """
    if not (
        isinstance(coeff, CounterexampleCoefficient)
        and coeff.lam == sol.lam
        and coeff.N == sol.N
    ):
        raise ParameterError(
            f"Residual needs the counter-example coefficient of {sol}"
        )
    t = np.asarray(t, dtype=float)
    if (t <= 0).any() or (t >= 1).any():
        raise DomainError("Residual samples must have 0 < t < 1")
    s = sol.similarity(r, t)
    if (s <= sol.s_splice).any():
        raise DomainError(
            f"Residual samples need s > s_splice = {sol.s_splice:.6g}"
        )

    sample = sol.evaluate(r, t)
    if (sample.u >= coeff.u_star).any():
        raise DomainError("Residual samples must satisfy u < u_star")
    flux = coeff.eval_a(sample.u) * sample.laplacian
    absolute = float(np.max(np.abs(sample.u_t - flux)))
    scale = float(max(np.abs(sample.u_t).max(), np.abs(flux).max()))
    result = Residual(absolute, absolute / scale)
    logger.info(
        "Residual for lambda=%g, N=%d: %.3e (relative %.3e)",
        sol.lam,
        sol.N,
        result.absolute,
        result.relative,
    )
    return result


def standard_residual_grid(
    sol: SelfSimilarSolution, n_s: int = 60, n_t: int = 9
) -> tuple[np.ndarray, np.ndarray]:
    """
    Radii and times of s in [1.2 max(s0, s_splice), 3], t in [0.1, 0.9]

    Returns
    -------
    tuple
        (r, t) arrays of shape (n_t, n_s)
    """
    s_lo = RESIDUAL_MARGIN * max(sol.s0, sol.s_splice)
    s = np.linspace(s_lo, max(3.0, 1.5 * s_lo), n_s)
    t = np.linspace(0.1, 0.9, n_t)
    tt, ss = np.meshgrid(t, s, indexing="ij")
    return ss * np.sqrt(2 * tt), tt


def sample_selfsimilar(
    sol: SelfSimilarSolution,
    mesh: Mesh,
    times: Iterable[float],
) -> Trajectory:
    """
    The exact solution on the mesh nodes at `times`, zero on the
    Dirichlet nodes. At t = 0 the limit profile (1 at the origin, 0
    elsewhere) is used.
    """
    times = np.asarray(list(times), dtype=float)
    if (times < 0).any():
        raise DomainError("Sample times must be >= 0")
    states = []
    for t in times:
        if t == 0:
            u = np.where(np.isclose(mesh.nodes, 0.0, atol=1e-12), 1.0, 0.0)
        else:
            u = sol.evaluate(mesh.nodes, t).u
        u = np.array(u)
        u[mesh.boundary] = 0.0
        states.append(u)
    return Trajectory(mesh, times, np.array(states))
