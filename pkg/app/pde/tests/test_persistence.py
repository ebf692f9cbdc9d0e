"""
Contains tests for trajectory persistence and initial profiles
"""
import csv
import os
import tempfile

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import ParameterError
from pde.models import Mesh, Trajectory
from pde.profiles import bump, from_spec
from pde.serializers import InitialProfileSerializer, MeshSerializer


class TrajectoryPersistenceTest(SimpleTestCase):
    """
    Performs tests for the CSV and JSON forms of a trajectory
    """

    def setUp(self):
        mesh = Mesh.radial(1.0, 2, 5)
        self.traj = Trajectory(
            mesh, [0.0, 0.5], np.array([bump(mesh, 0, 0.8), np.zeros(5)])
        )

    def test_json(self):
        data = self.traj.to_json()
        self.assertEqual(data["mesh"]["N"], 2)
        restored = Trajectory.from_json(data)
        self.assertEqual(restored.mesh, self.traj.mesh)
        np.testing.assert_array_equal(restored.states, self.traj.states)

    def test_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "trajectory.csv")
            self.traj.write_csv(path)
            with open(path) as handle:
                rows = list(csv.reader(handle))
        self.assertEqual(rows[0], ["t", "x", "u"])
        self.assertEqual(len(rows), 11)
        self.assertEqual(float(rows[1][2]), self.traj.states[0, 0])

    def test_states_are_read_only(self):
        with self.assertRaises(ValueError):
            self.traj.states[0, 0] = 1.0


class ProfileTest(SimpleTestCase):
    """
    Performs tests for named initial profiles
    """

    def test_bump_support(self):
        mesh = Mesh.interval(0, 1, 101)
        u = from_spec(mesh, {"kind": "bump", "center": 0.5, "width": 0.05})
        support = mesh.nodes[u > 0]
        self.assertGreater(support.min(), 0.45)
        self.assertLess(support.max(), 0.55)
        self.assertEqual(u.max(), 1.0)

    def test_table(self):
        mesh = Mesh.interval(0, 1, 11)
        u = from_spec(mesh, {"kind": "table", "x": [0.2, 0.5], "u": [0, 1]})
        self.assertAlmostEqual(u[4], 2 / 3, places=12)

    def test_unknown_profile(self):
        with self.assertRaises(ParameterError):
            from_spec(Mesh.interval(0, 1, 11), {"kind": "gaussian"})

    def test_serializers(self):
        mesh = MeshSerializer(
            data={"geometry": "radial", "R": 2, "N": 3, "n_x": 41}
        )
        self.assertTrue(mesh.is_valid(), mesh.errors)
        self.assertEqual(mesh.save(), Mesh.radial(2, 3, 41))
        profile = InitialProfileSerializer(
            data={"kind": "bump", "center": 0.5}
        )
        self.assertFalse(profile.is_valid())
        self.assertIn("width", profile.errors)
