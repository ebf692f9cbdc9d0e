"""
Contains the Trajectory model: sampled states of a run on a mesh
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import InternalInvariantError

from .mesh import Mesh


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Trajectory:
    """
    States u(., t_i) on `mesh` at strictly increasing times t_i.

    Parameters
    ----------
    mesh: Mesh
    times: ndarray
        Output times, shape (n_t,)
    states: ndarray
        Grid functions, shape (n_t, n_x)
    step_log: dict
        "dt" and "cfl" histories of the solver, empty for sampled data
    """

    mesh: Mesh
    times: np.ndarray
    states: np.ndarray
    step_log: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        times = _frozen(self.times)
        states = _frozen(self.states)
        if states.shape != (times.size, self.mesh.n_x):
            raise InternalInvariantError(
                f"States of shape {states.shape} do not match "
                f"{times.size} times on {self.mesh.n_x} nodes"
            )
        if (np.diff(times) <= 0).any():
            raise InternalInvariantError("Output times must increase")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    def to_json(self) -> dict:
        return {
            "mesh": self.mesh.to_dict(),
            "times": self.times.tolist(),
            "states": self.states.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Trajectory:
        return cls(
            Mesh.from_dict(data["mesh"]),
            data["times"],
            data["states"],
        )

    def write_csv(self, path: str) -> None:
        """One row per (t, x) pair, columns t, x, u"""
        x = self.mesh.nodes
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["t", "x", "u"])
            for t, state in zip(self.times, self.states):
                for xi, ui in zip(x, state):
                    writer.writerow(
                        [repr(float(t)), repr(float(xi)), repr(float(ui))]
                    )
