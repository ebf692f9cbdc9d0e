"""
Contains tests for the Lyapunov functionals
"""
import numpy as np
from django.test import SimpleTestCase

from coefficients.models import ConstantCoefficient
from core.exceptions import ParameterError
from pde.models import Mesh, Trajectory
from pde.profiles import bump, sine
from pde.solver import solve_ibvp
from stability.functionals import basic_model, compute_Y, compute_Z
from weights.models import PowerWeight


def still(mesh, state):
    return Trajectory(mesh, [0.0], np.array([state]))


class ComputeYTest(SimpleTestCase):
    """
    Performs tests for Y(t) = int [H(u)]^nu
    """

    def test_zero_state(self):
        mesh = Mesh.interval(0, 1, 51)
        series = compute_Y(still(mesh, np.zeros(51)), PowerWeight(0.5), 2)
        np.testing.assert_array_equal(series.values, 0.0)

    def test_constant_state(self):
        mesh = Mesh.interval(0, 2, 41)
        series = compute_Y(still(mesh, np.full(41, 3.0)), PowerWeight(0), 2)
        self.assertAlmostEqual(series.values[0], 18.0, places=10)

    def test_radial_measure(self):
        mesh = Mesh.radial(1.0, 2, 201)
        series = compute_Y(still(mesh, np.ones(201)), PowerWeight(0), 1)
        self.assertAlmostEqual(series.values[0], np.pi, places=10)

        mesh = Mesh.radial(1.0, 3, 201)
        series = compute_Y(still(mesh, np.ones(201)), PowerWeight(0), 1)
        self.assertAlmostEqual(series.values[0], 4 * np.pi / 3, delta=1e-3)

    def test_heat_equation(self):
        """
        u = exp(-pi^2 t) sin(pi x): int u^2 = exp(-2 pi^2 t)/2.
        """
        mesh = Mesh.interval(0, 1, 201)
        traj = solve_ibvp(
            ConstantCoefficient(1), mesh, sine(mesh), 0.1, [0.05, 0.1]
        )
        series = compute_Y(traj, PowerWeight(0), 2)
        exact = 0.5 * np.exp(-2 * np.pi**2 * traj.times)
        np.testing.assert_allclose(series.values, exact, atol=1e-3)
        self.assertEqual(series.descriptor["exponent"], 2)

    def test_scaling_of_initial_value(self):
        """
        u0 -> c u0 scales int (u^(1 - gamma))^m by c^(m (1 - gamma)).
        """
        mesh = Mesh.interval(0, 1, 101)
        u0 = bump(mesh, 0.5, 0.3)
        w = PowerWeight(0.5)
        base = compute_Y(still(mesh, u0), w, 1.5).values[0]
        scaled = compute_Y(still(mesh, 3 * u0), w, 1.5).values[0]
        self.assertAlmostEqual(scaled / base, 3**0.75, places=12)

    def test_exponent_domain(self):
        mesh = Mesh.interval(0, 1, 11)
        traj = still(mesh, np.zeros(11))
        with self.assertRaises(ParameterError):
            compute_Y(traj, PowerWeight(0), 0.5)
        self.assertEqual(compute_Z(traj, PowerWeight(0), 0.5).values[0], 0)
        with self.assertRaises(ParameterError):
            compute_Z(traj, PowerWeight(0), 0)


class BasicModelTest(SimpleTestCase):
    def test_flux_weight_is_constant(self):
        coeff, w = basic_model(K=2, gamma=0.5)
        s = np.array([1e-6, 0.3, 4.0])
        np.testing.assert_allclose(w.eval_F(coeff, s), 2.0, rtol=1e-12)

    def test_domain(self):
        with self.assertRaises(ParameterError):
            basic_model(K=1, gamma=0)
