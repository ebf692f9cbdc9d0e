"""
Numeric validation of the one-dimensional embedding constant c0 in
||w||_q <= c0 ||w'||_2 for w vanishing at the ends of (0, 1)
"""
import logging

import numpy as np

from core.exceptions import ParameterError
from core.utils import trapezoid

logger = logging.getLogger(__name__)


def validate_poincare_constant(
    c0: float,
    q: float,
    samples: int = 200,
    seed: int = 0,
    modes: int = 8,
    n_x: int = 2001,
) -> dict:
    """
    Draws random sine series w = sum_j a_j sin(j pi x), a_j ~ N(0, 1)/j,
    and compares ||w||_q with c0 ||w'||_2, both by trapezoid quadrature.

    Returns
    -------
    dict
        "valid" is True when every sample satisfies the bound;
        "max_ratio" is the largest observed ||w||_q / ||w'||_2
    """
    if not (c0 > 0 and q >= 1):
        raise ParameterError("Need c0 > 0 and q >= 1")
    if samples < 1 or modes < 1:
        raise ParameterError("Need at least one sample and one mode")

    rng = np.random.default_rng(seed)
    x = np.linspace(0.0, 1.0, n_x)
    j = np.arange(1, modes + 1)
    basis = np.sin(np.pi * np.outer(j, x))
    derivative = np.pi * j[:, None] * np.cos(np.pi * np.outer(j, x))

    amplitudes = rng.standard_normal((samples, modes)) / j
    w = amplitudes @ basis
    w_x = amplitudes @ derivative
    norm_q = trapezoid(np.abs(w) ** q, x, axis=1) ** (1 / q)
    norm_grad = np.sqrt(trapezoid(w_x**2, x, axis=1))
    ratio = norm_q / norm_grad

    result = {
        "c0": c0,
        "q": q,
        "samples": samples,
        "seed": seed,
        "max_ratio": float(ratio.max()),
        "valid": bool((ratio <= c0).all()),
    }
    logger.info(
        "Embedding constant %g: max observed ratio %.4f over %d samples",
        c0,
        result["max_ratio"],
        samples,
    )
    return result
