"""
Contains tests for the explicit solver
"""
import numpy as np
from django.test import SimpleTestCase

from coefficients.models import ConstantCoefficient, PowerLawCoefficient
from core.exceptions import DomainError, StiffnessError
from pde.models import Mesh
from pde.profiles import bump, sine
from pde.solver import explicit_step, solve_ibvp, stable_dt


def heat_run(n_x: int, t_end: float):
    mesh = Mesh.interval(0, 1, n_x)
    return solve_ibvp(ConstantCoefficient(1), mesh, sine(mesh), t_end, [t_end])


class MeshTest(SimpleTestCase):
    """
    Performs tests for the discrete Laplacians
    """

    def test_radial_laplacian_of_quadratic(self):
        """
        Lap(1 - r^2) = -2N, reproduced exactly including the origin.
        """
        for N in (1, 2, 3):
            mesh = Mesh.radial(1.0, N, 41)
            lap = mesh.laplacian(1 - mesh.nodes**2)
            np.testing.assert_allclose(lap[:-1], -2 * N, rtol=1e-9)
            self.assertEqual(lap[-1], 0.0)

    def test_interval_spacing(self):
        mesh = Mesh.interval(-2, 2, 401)
        self.assertAlmostEqual(mesh.dr, 0.01, places=15)
        self.assertEqual(list(mesh.boundary), [0, 400])


class HeatRegressionTest(SimpleTestCase):
    """
    Performs tests against u = exp(-pi^2 t) sin(pi x)
    """

    def test_l2_error(self):
        traj = heat_run(201, 0.1)
        x = traj.mesh.nodes
        exact = np.exp(-np.pi**2 * 0.1) * np.sin(np.pi * x)
        error = np.sqrt(traj.mesh.dr * np.sum((traj.states[-1] - exact) ** 2))
        self.assertLess(error, 1e-3)
        self.assertEqual(traj.times[-1], 0.1)

    def test_self_convergence_order(self):
        """
        Halving dr (dt coupled by the CFL bound) gives order >= 1.7.
        """
        coarse, mid, fine = (
            heat_run(n, 0.05).states[-1] for n in (51, 101, 201)
        )
        first = np.abs(coarse - mid[::2]).max()
        second = np.abs(mid - fine[::2]).max()
        self.assertGreaterEqual(np.log2(first / second), 1.7)

    def test_zero_is_fixed_point(self):
        mesh = Mesh.interval(0, 1, 51)
        traj = solve_ibvp(
            PowerLawCoefficient(1, 0.5), mesh, np.zeros(51), 1.0
        )
        self.assertEqual(np.abs(traj.states).max(), 0.0)


class DegenerateRunTest(SimpleTestCase):
    """
    Performs tests on degenerate runs
    """

    def setUp(self):
        self.mesh = Mesh.interval(0, 1, 101)
        self.coeff = PowerLawCoefficient(2, 0.5)
        self.u0 = bump(self.mesh, 0.5, 0.3)
        self.traj = solve_ibvp(
            self.coeff, self.mesh, self.u0, 0.5, np.linspace(0.01, 0.5, 50)
        )

    def test_positivity_and_boundary(self):
        self.assertGreaterEqual(self.traj.states.min(), 0.0)
        self.assertTrue((self.traj.states[:, [0, -1]] == 0).all())

    def test_maximum_principle(self):
        peaks = self.traj.states.max(axis=1)
        self.assertTrue((np.diff(peaks) <= 0).all())

    def test_support_stays_inside_initial_support(self):
        """
        Vacuum nodes are frozen by a(0) = 0.
        """
        vacuum = self.u0 == 0
        self.assertTrue((self.traj.states[:, vacuum] == 0).all())

    def test_cfl_bound_in_step_log(self):
        self.assertLessEqual(max(self.traj.step_log["cfl"]), 0.4 + 1e-12)
        self.assertEqual(
            len(self.traj.step_log["dt"]), len(self.traj.step_log["cfl"])
        )

    def test_radial_run(self):
        for N in (2, 3):
            mesh = Mesh.radial(1.0, N, 81)
            traj = solve_ibvp(
                self.coeff, mesh, bump(mesh, 0.0, 0.6), 0.2, [0.05, 0.1]
            )
            self.assertGreaterEqual(traj.states.min(), 0.0)
            peaks = traj.states.max(axis=1)
            self.assertTrue((np.diff(peaks) <= 0).all())

    def test_explicit_step(self):
        """
        The public step is the solver update with a CFL-admissible dt.
        """
        dt = stable_dt(self.coeff, self.mesh, self.u0)
        after = explicit_step(self.coeff, self.mesh, self.u0, dt)
        self.assertGreaterEqual(after.min(), 0.0)
        self.assertLessEqual(after.max(), self.u0.max())

    def test_single_step_run_matches_explicit_step(self):
        dt = 0.5 * stable_dt(self.coeff, self.mesh, self.u0)
        traj = solve_ibvp(self.coeff, self.mesh, self.u0, dt, [dt])
        expected = explicit_step(self.coeff, self.mesh, self.u0, dt)
        self.assertEqual(traj.step_log["dt"], [dt])
        np.testing.assert_allclose(traj.states[-1], expected, atol=1e-15)


class SolverErrorTest(SimpleTestCase):
    """
    Performs tests for rejected runs
    """

    def test_negative_initial_data(self):
        mesh = Mesh.interval(0, 1, 11)
        u0 = np.zeros(11)
        u0[5] = -1.0
        with self.assertRaises(DomainError):
            solve_ibvp(ConstantCoefficient(1), mesh, u0, 0.1)

    def test_nonzero_boundary(self):
        mesh = Mesh.interval(0, 1, 11)
        with self.assertRaises(DomainError):
            solve_ibvp(ConstantCoefficient(1), mesh, np.ones(11), 0.1)

    def test_stiffness(self):
        """
        A huge coefficient drives the CFL step below 1e-14.
        """
        mesh = Mesh.interval(0, 1, 101)
        with self.assertRaises(StiffnessError) as context:
            solve_ibvp(
                PowerLawCoefficient(1e12, 1), mesh, sine(mesh), 1.0
            )
        self.assertLess(context.exception.dt, 1e-14)
        self.assertEqual(context.exception.time, 0.0)
