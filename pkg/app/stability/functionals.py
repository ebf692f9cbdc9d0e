"""
Lyapunov functionals Y(t) = int [H(u)]^nu dx sampled on trajectories
"""
import logging

import numpy as np

from coefficients.models import PowerLawCoefficient
from core.exceptions import ParameterError
from core.utils import trapezoid
from pde.models import Trajectory
from weights.models import PowerWeight, WeightPair

from .models import FunctionalSeries

logger = logging.getLogger(__name__)


def _integrate_power(
    traj: Trajectory, w: WeightPair, exponent: float
) -> FunctionalSeries:
    mesh = traj.mesh
    H = w.eval_H(traj.states)
    values = trapezoid(H**exponent * mesh.measure(), mesh.nodes, axis=1)
    descriptor = {
        "weight": w.to_dict(),
        "exponent": exponent,
        "quadrature": "trapezoid",
        "mesh": mesh.to_dict(),
    }
    logger.debug(
        "Functional of exponent %g: %.6e at t0", exponent, float(values[0])
    )
    return FunctionalSeries(traj.times, np.maximum(values, 0.0), descriptor)


def compute_Y(
    traj: Trajectory, w: WeightPair, exponent: float
) -> FunctionalSeries:
    """
    Trapezoid quadrature of [H(u)]^exponent over the mesh at every output
    time (with the r^(N-1) surface measure on a ball).

    Raises
    ------
    ParameterError
        If exponent < 1
    """
    if not exponent >= 1:
        raise ParameterError(f"Functional exponent must be >= 1: {exponent}")
    return _integrate_power(traj, w, exponent)


def compute_Z(
    traj: Trajectory, w: WeightPair, exponent: float
) -> FunctionalSeries:
    """Auxiliary functional int [H(u)]^exponent, any exponent > 0"""

    if not exponent > 0:
        raise ParameterError(f"Functional exponent must be > 0: {exponent}")
    return _integrate_power(traj, w, exponent)


def basic_model(K: float, gamma: float):
    """
    Coefficient and weight pair of (u^(1 - gamma))_t = K Laplacian(u).

    Returns
    -------
    tuple
        (PowerLawCoefficient K/(1 - gamma) s^gamma, PowerWeight gamma), for
        which F = h a = K
    """
    if not 0 < gamma < 1:
        raise ParameterError(f"Basic model needs 0 < gamma < 1: {gamma}")
    if not K > 0:
        raise ParameterError(f"Basic model needs K > 0: {K}")
    return PowerLawCoefficient(K / (1 - gamma), gamma), PowerWeight(gamma)
