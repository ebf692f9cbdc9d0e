"""
Explicit finite-difference solver of u_t = a(u) Lap u with homogeneous
Dirichlet data
"""
import logging
from typing import Iterable, Optional

import numpy as np
from django.conf import settings

from coefficients.models import Coefficient
from core.exceptions import (
    DomainError,
    InternalInvariantError,
    ParameterError,
    StiffnessError,
)

from .models import Mesh, Trajectory

logger = logging.getLogger(__name__)

# Relative size below which boundary values and negative rounding are zeroed
ROUNDOFF = 1e-13
BOUNDARY_TOLERANCE = 1e-12


def explicit_step(
    coeff: Coefficient,
    mesh: Mesh,
    u: np.ndarray,
    dt: float,
) -> np.ndarray:
    """
    One step u + dt a(u) L_h u. Dirichlet nodes stay where they are.
    """
    return u + dt * coeff.eval_a(u) * mesh.laplacian(u)


def stable_dt(
    coeff: Coefficient,
    mesh: Mesh,
    u: np.ndarray,
    cfl_safe: Optional[float] = None,
) -> float:
    """
    Largest dt with dt max a(u) stencil / dr^2 <= CFL_SAFE, inf in vacuum
    """
    return _cfl_dt(mesh, float(np.max(coeff.eval_a(u))), cfl_safe)


def _cfl_dt(mesh, a_max, cfl_safe):
    cfl_safe = cfl_safe or settings.LAB["CFL_SAFE"]
    if a_max == 0:
        return np.inf
    return cfl_safe * mesh.dr**2 / (a_max * mesh.stencil_factor)


def _check_initial_data(mesh: Mesh, u0) -> np.ndarray:
    u0 = np.array(u0, dtype=float)
    if u0.shape != (mesh.n_x,):
        raise DomainError(
            f"Initial data has shape {u0.shape}, the mesh has {mesh.n_x} nodes"
        )
    if not np.isfinite(u0).all() or (u0 < 0).any():
        raise DomainError("Initial data must be finite and nonnegative")
    scale = u0.max()
    edge = u0[mesh.boundary]
    if (edge > BOUNDARY_TOLERANCE * scale).any():
        raise DomainError(
            f"Initial data must vanish on the Dirichlet boundary: {edge}"
        )
    u0[mesh.boundary] = 0.0
    return u0


def output_schedule(t_end: float, output_times) -> np.ndarray:
    if not t_end > 0:
        raise ParameterError(f"t_end must be positive: {t_end}")
    if output_times is None:
        outputs = np.linspace(0, t_end, 11)[1:]
    else:
        outputs = np.unique(np.asarray(list(output_times), dtype=float))
        outputs = outputs[outputs > 0]
        if (outputs > t_end).any():
            raise ParameterError("Output times must not exceed t_end")
        if outputs.size == 0 or outputs[-1] < t_end:
            outputs = np.append(outputs, t_end)
    return outputs


def solve_ibvp(
    coeff: Coefficient,
    mesh: Mesh,
    u0: Iterable[float],
    t_end: float,
    output_times: Optional[Iterable[float]] = None,
    cfl_safe: Optional[float] = None,
) -> Trajectory:
    """
    Solves u_t = a(u) Lap u, u = 0 on the Dirichlet boundary, u(0) = u0.

    Each step uses the largest CFL-admissible dt, shortened to land
    exactly on the next output time. Vacuum nodes (a(0) = 0) are frozen,
    so the discrete support never grows.

    Parameters
    ----------
    coeff: Coefficient
    mesh: Mesh
    u0: iterable of float
        Nonnegative initial data, zero on the Dirichlet nodes (values up
        to 1e-12 max(u0) there are set to 0)
    t_end: float
    output_times: iterable of float, optional
        Times in (0, t_end] at which states are stored; t = 0 and t_end
        are always stored. Defaults to ten equal intervals.
    cfl_safe: float, optional
        Safety factor, defaults to `settings.LAB["CFL_SAFE"]`

    Returns
    -------
    Trajectory

    Raises
    ------
    DomainError
        If u0 is negative or nonzero on the boundary
    StiffnessError
        If the admissible dt falls below `settings.LAB["MIN_DT"]`
    InternalInvariantError
        If a step produces a significantly negative value
    """
    u = _check_initial_data(mesh, u0)
    outputs = output_schedule(t_end, output_times)
    min_dt = settings.LAB["MIN_DT"]
    floor = -ROUNDOFF * max(u.max(), np.finfo(float).tiny)
    a_factor = mesh.stencil_factor / mesh.dr**2

    states = [u.copy()]
    dt_log, cfl_log = [], []
    t = 0.0
    for target in outputs:
        while t < target:
            a = coeff.eval_a(u)
            a_max = float(a.max())
            dt_cfl = _cfl_dt(mesh, a_max, cfl_safe)
            remaining = target - t
            landing = dt_cfl >= remaining
            dt = remaining if landing else dt_cfl
            if not landing and dt < min_dt:
                raise StiffnessError(
                    f"CFL step {dt:.3g} below {min_dt:.3g} at t = {t:.6g}",
                    dt=dt,
                    time=t,
                )
            u = explicit_step(coeff, mesh, u, dt)
            if u.min() < floor:
                raise InternalInvariantError(
                    f"Negative value {u.min():.3g} at t = {t + dt:.6g}"
                )
            np.clip(u, 0.0, None, out=u)
            u[mesh.boundary] = 0.0
            t = float(target) if landing else t + dt
            dt_log.append(dt)
            cfl_log.append(dt * a_max * a_factor)
        states.append(u.copy())
        logger.debug("t = %.6g after %d steps", t, len(dt_log))

    logger.info(
        "Solved on %s nodes to t = %g in %d steps",
        mesh.n_x,
        t_end,
        len(dt_log),
    )
    return Trajectory(
        mesh,
        np.concatenate([[0.0], outputs]),
        np.array(states),
        {"dt": dt_log, "cfl": cfl_log},
    )
