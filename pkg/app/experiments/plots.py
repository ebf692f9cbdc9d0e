"""
Static figures of the experiments, drawn with the object-oriented
matplotlib API (no pyplot state)
"""
from typing import Optional

import numpy as np
from matplotlib.figure import Figure


def _figure(title: str, xlabel: str, ylabel: str):
    figure = Figure(figsize=(6, 4))
    axes = figure.add_subplot()
    axes.set_title(title)
    axes.set_xlabel(xlabel)
    axes.set_ylabel(ylabel)
    axes.grid(True, alpha=0.3)
    return figure, axes


def decay_figure(times, values, envelope: Optional[np.ndarray] = None):
    """Y(t) against its envelope on a log scale"""

    figure, axes = _figure("Lyapunov functional", "t", "Y(t)")
    positive = np.asarray(values) > 0
    axes.semilogy(np.asarray(times)[positive], np.asarray(values)[positive])
    if envelope is not None:
        axes.semilogy(times, envelope, linestyle="--", label="envelope")
        axes.legend()
    return figure


def growth_figure(s, aI):
    """a(s) I(s) against |ln s|"""

    figure, axes = _figure("Condition at 0", "|ln s|", "a(s) I(s)")
    axes.plot(np.abs(np.log(s)), aI, marker=".")
    return figure


def support_figure(times, supports, threshold: float):
    """Support hull [lo, hi] of u >= threshold against t"""

    figure, axes = _figure(f"Support (u >= {threshold:.1e})", "t", "x")
    hulls = [
        (t, hull) for t, hull in zip(times, supports) if hull is not None
    ]
    if hulls:
        t = [t for t, _ in hulls]
        axes.plot(t, [hull[0] for _, hull in hulls], color="C0")
        axes.plot(t, [hull[1] for _, hull in hulls], color="C0")
    return figure


def profiles_figure(x, times, states):
    figure, axes = _figure("Solution", "x", "u")
    for t, u in zip(times, states):
        axes.plot(x, u, label=f"t={t:.3g}")
    if len(times) <= 12:
        axes.legend(fontsize="small")
    return figure
