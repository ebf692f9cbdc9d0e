"""
Discrete residual of the weak inequality
int int grad u . grad(F(u) phi) dx dt <= int int H(u) phi_t dx dt
"""
import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from coefficients.models import Coefficient
from core.exceptions import DomainError, ParameterError
from core.utils import trapezoid
from weights.models import WeightPair

from .models import Trajectory

logger = logging.getLogger(__name__)


def _bump(z: np.ndarray) -> np.ndarray:
    return np.where(np.abs(z) < 1, (1 - z**2) ** 2, 0.0)


def _bump_derivative(z: np.ndarray) -> np.ndarray:
    return np.where(np.abs(z) < 1, -4 * z * (1 - z**2), 0.0)


@dataclass(frozen=True)
class TestFunction:
    """
    Tensor-product bump phi(x, t) = amplitude psi(x) chi(t), supported on
    [center - width, center + width] x [t_start, t_stop].
    """

    # Keeps pytest from collecting the class
    __test__ = False

    center: float
    width: float
    t_start: float
    t_stop: float
    amplitude: float = 1.0

    def __post_init__(self) -> None:
        if not self.width > 0 or not self.t_stop > self.t_start:
            raise ParameterError("A test function needs a nonempty support")
        if self.amplitude < 0:
            raise ParameterError("Test functions must be nonnegative")

    def _time_variable(self, t: np.ndarray) -> np.ndarray:
        mid = (self.t_start + self.t_stop) / 2
        return (t - mid) / ((self.t_stop - self.t_start) / 2)

    def psi(self, x: np.ndarray) -> np.ndarray:
        return self.amplitude * _bump((x - self.center) / self.width)

    def chi(self, t: np.ndarray) -> np.ndarray:
        return _bump(self._time_variable(t))

    def chi_t(self, t: np.ndarray) -> np.ndarray:
        scale = 2 / (self.t_stop - self.t_start)
        return scale * _bump_derivative(self._time_variable(t))


def weak_residual(
    traj: Trajectory,
    w: WeightPair,
    coeff: Coefficient,
    test_fns: Iterable[TestFunction],
) -> float:
    """
    Max over the test functions of LHS - RHS of the weak inequality,
    both sides by trapezoid quadrature over the mesh and output times
    (with the r^(N-1) measure on a ball). Spatial derivatives are
    centered differences of the sampled states.

    Returns
    -------
    float
        0 for an empty set of test functions

    Raises
    ------
    DomainError
        If a test function is not supported inside the mesh and the
        trajectory's time span
    """
    mesh = traj.mesh
    x = mesh.nodes
    measure = mesh.measure()
    u = traj.states
    t = traj.times

    u_x = np.gradient(u, x, axis=1)
    H = w.eval_H(u)
    F = w.eval_F(coeff, u)

    residuals = []
    for phi in test_fns:
        lo, hi = phi.center - phi.width, phi.center + phi.width
        if not mesh.contains(lo, hi):
            raise DomainError(
                f"Test function support [{lo}, {hi}] leaves the mesh"
            )
        if phi.t_start < t[0] or phi.t_stop > t[-1]:
            raise DomainError(
                f"Test function window [{phi.t_start}, {phi.t_stop}] "
                f"leaves [{t[0]}, {t[-1]}]"
            )
        values = np.outer(phi.chi(t), phi.psi(x))
        flux = np.gradient(F * values, x, axis=1)
        lhs = trapezoid(trapezoid(u_x * flux * measure, x, axis=1), t)
        phi_t = np.outer(phi.chi_t(t), phi.psi(x))
        rhs = trapezoid(trapezoid(H * phi_t * measure, x, axis=1), t)
        residual = float(lhs - rhs)
        logger.debug(
            "Weak residual %.3e (lhs %.6e, rhs %.6e)", residual, lhs, rhs
        )
        residuals.append(residual)
    return max(residuals, default=0.0)


def weak_scale(
    traj: Trajectory,
    w: WeightPair,
    test_fns: Iterable[TestFunction],
) -> float:
    """Max of int int |H(u) phi_t|, the natural size of a residual"""

    x, t = traj.mesh.nodes, traj.times
    H = w.eval_H(traj.states)
    measure = traj.mesh.measure()
    scales = [
        trapezoid(
            trapezoid(
                np.abs(H * np.outer(phi.chi_t(t), phi.psi(x))) * measure,
                x,
                axis=1,
            ),
            t,
        )
        for phi in test_fns
    ]
    return float(max(scales, default=0.0))
