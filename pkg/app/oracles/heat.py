"""
Separable solutions of the heat equation u_t = K u_xx on (0, 1)
"""
import numpy as np

from core.exceptions import ParameterError


def heat_solution(K: float, k: int, x, t):
    """exp(-K (k pi)^2 t) sin(k pi x), zero at x = 0 and x = 1"""

    if not K > 0 or int(k) != k or k < 1:
        raise ParameterError("Need K > 0 and an integer mode k >= 1")
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.exp(-K * (k * np.pi) ** 2 * t) * np.sin(k * np.pi * x)
