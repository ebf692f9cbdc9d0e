"""
Named initial profiles sampled on a mesh
"""
from typing import Iterable

import numpy as np

from core.exceptions import ParameterError

from .models import Mesh


def bump(
    mesh: Mesh,
    center: float,
    width: float,
    height: float = 1.0,
) -> np.ndarray:
    """
    height (1 - ((x - center)/width)^2)^2 on |x - center| < width, else 0
    """
    if not width > 0 or not height >= 0:
        raise ParameterError("A bump needs width > 0 and height >= 0")
    z = (mesh.nodes - center) / width
    u = np.where(np.abs(z) < 1, height * (1 - z**2) ** 2, 0.0)
    u[mesh.boundary] = 0.0
    return u


def sine(mesh: Mesh, k: int = 1, amplitude: float = 1.0) -> np.ndarray:
    """amplitude sin(k pi (x - x_lo)/(x_hi - x_lo)), clipped at 0"""

    if int(k) != k or k < 1:
        raise ParameterError(f"Sine mode must be a positive integer: {k}")
    z = (mesh.nodes - mesh.x_lo) / (mesh.x_hi - mesh.x_lo)
    u = np.clip(amplitude * np.sin(k * np.pi * z), 0.0, None)
    u[mesh.boundary] = 0.0
    return u


def table(
    mesh: Mesh,
    x: Iterable[float],
    u: Iterable[float],
) -> np.ndarray:
    """Piecewise-linear interpolation of (x_i, u_i), 0 outside"""

    x = np.asarray(list(x), dtype=float)
    u = np.asarray(list(u), dtype=float)
    if x.shape != u.shape or x.size < 2 or (np.diff(x) <= 0).any():
        raise ParameterError("A profile table needs increasing x of size >= 2")
    if (u < 0).any():
        raise ParameterError("Profile values must be nonnegative")
    values = np.interp(mesh.nodes, x, u, left=0.0, right=0.0)
    values[mesh.boundary] = 0.0
    return values


PROFILES = {
    "bump": bump,
    "sine": sine,
    "table": table,
}


def from_spec(mesh: Mesh, spec: dict) -> np.ndarray:
    """
    Samples {"kind": "bump", "center": ..., "width": ..., "height": ...},
    {"kind": "sine", "k": ...} or {"kind": "table", "x": [...], "u": [...]}
    """
    params = dict(spec)
    kind = params.pop("kind", None)
    if kind not in PROFILES:
        raise ParameterError(f"Unknown initial profile: {kind}")
    try:
        return PROFILES[kind](mesh, **params)
    except TypeError as exc:
        raise ParameterError(f"Invalid '{kind}' profile: {exc}")
