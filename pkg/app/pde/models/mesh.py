"""
Contains the uniform meshes of the solver
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy import special

from core.exceptions import ParameterError

INTERVAL = "interval"
RADIAL = "radial"


@dataclass(frozen=True)
class Mesh:
    """
    Uniform mesh of an interval [x_lo, x_hi], or of the radius [0, R] of
    a ball in dimension N (radially symmetric functions).

    Dirichlet nodes are both ends of an interval and r = R of a ball; the
    origin of a ball carries the symmetry condition u'(0) = 0.
    """

    geometry: str
    n_x: int
    x_lo: float = 0.0
    x_hi: float = 1.0
    N: int = 1

    def __post_init__(self) -> None:
        if self.geometry not in (INTERVAL, RADIAL):
            raise ParameterError(f"Unknown mesh geometry: {self.geometry}")
        if int(self.n_x) != self.n_x or self.n_x < 3:
            raise ParameterError(f"A mesh needs n_x >= 3 nodes: {self.n_x}")
        if not self.x_hi > self.x_lo:
            raise ParameterError(
                f"Empty mesh interval [{self.x_lo}, {self.x_hi}]"
            )
        if self.geometry == RADIAL:
            if self.x_lo != 0:
                raise ParameterError("A radial mesh starts at r = 0")
            # The radial stencil stays monotone for N <= 3 only
            if self.N not in (1, 2, 3):
                raise ParameterError(f"Radial dimension must be 1-3: {self.N}")

    @classmethod
    def interval(cls, x_lo: float, x_hi: float, n_x: int) -> Mesh:
        return cls(INTERVAL, int(n_x), float(x_lo), float(x_hi), 1)

    @classmethod
    def radial(cls, R: float, N: int, n_x: int) -> Mesh:
        return cls(RADIAL, int(n_x), 0.0, float(R), int(N))

    @property
    def radial_geometry(self) -> bool:
        return self.geometry == RADIAL

    @property
    def dr(self) -> float:
        return (self.x_hi - self.x_lo) / (self.n_x - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_lo, self.x_hi, self.n_x)

    @property
    def boundary(self) -> np.ndarray:
        """Indices of the Dirichlet nodes"""
        if self.radial_geometry:
            return np.array([self.n_x - 1])
        return np.array([0, self.n_x - 1])

    @property
    def stencil_factor(self) -> int:
        """
        Largest diagonal weight of the Laplacian in units of 2/dr^2
        (the radial origin stencil is 2N(u_1 - u_0)/dr^2)
        """
        return self.N if self.radial_geometry else 1

    def measure(self) -> np.ndarray:
        """
        Quadrature density of dx, r^(N-1) |S^(N-1)| on a ball
        """
        if not self.radial_geometry:
            return np.ones(self.n_x)
        sphere = 2 * math.pi ** (self.N / 2) / special.gamma(self.N / 2)
        return sphere * self.nodes ** (self.N - 1)

    def laplacian(self, u: np.ndarray) -> np.ndarray:
        """
        3-point Laplacian, or u'' + (N-1)/r u' on a ball; zero on the
        Dirichlet nodes.
        """
        dr2 = self.dr**2
        lap = np.zeros_like(u)
        lap[1:-1] = (u[2:] - 2 * u[1:-1] + u[:-2]) / dr2
        if self.radial_geometry:
            r = self.nodes[1:-1]
            lap[1:-1] += (
                (self.N - 1) / r * (u[2:] - u[:-2]) / (2 * self.dr)
            )
            lap[0] = 2 * self.N * (u[1] - u[0]) / dr2
        return lap

    def contains(self, lo: float, hi: float) -> bool:
        return self.x_lo <= lo < hi <= self.x_hi

    def to_dict(self) -> dict:
        data = asdict(self)
        if not self.radial_geometry:
            data.pop("N")
        return data

    @classmethod
    def from_dict(cls, data: dict) -> Mesh:
        return cls(
            data["geometry"],
            int(data["n_x"]),
            float(data.get("x_lo", 0.0)),
            float(data.get("x_hi", 1.0)),
            int(data.get("N", 1)),
        )
