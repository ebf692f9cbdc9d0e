"""
Contains the decay tests on solver runs of the basic model
u_t = 2 u^(1/2) Lap u on (0, 1), i.e. (u^(1/2))_t = Lap u
"""
import numpy as np
from django.test import SimpleTestCase

from pde.models import Mesh
from pde.profiles import bump
from pde.solver import solve_ibvp
from stability.envelopes import analytic_rate_basic
from stability.functionals import basic_model, compute_Y, compute_Z
from stability.models import DecayEnvelope, OdiParams
from stability.poincare import validate_poincare_constant
from stability.verification import verify_envelope, verify_odi, z_bound
from weights.models import PowerWeight

GAMMA, K, M = 0.5, 1.0, 1.5
C0 = 0.5


class BasicModelDecayTest(SimpleTestCase):
    """
    Performs tests of the functionals of one basic model run
    """

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.coeff, cls.w = basic_model(K, GAMMA)
        mesh = Mesh.interval(0, 1, 401)
        cls.traj = solve_ibvp(
            cls.coeff,
            mesh,
            bump(mesh, 0.5, 0.4),
            2.0,
            np.linspace(0, 2, 101),
        )

    def test_embedding_constant(self):
        """
        c0 = 1/2 bounds ||w||_q / ||w'||_2 for q = 2m/(m + gamma).
        """
        result = validate_poincare_constant(C0, 2 * M / (M + GAMMA))
        self.assertTrue(result["valid"])
        self.assertLess(result["max_ratio"], C0)

    def test_envelope_dominance(self):
        series = compute_Y(self.traj, PowerWeight(0), M)
        k1, beta = analytic_rate_basic(K, GAMMA, M, C0)
        env = DecayEnvelope(k1, beta, Y0=series.values[0])
        report = verify_envelope(series, env, slack=0.05)
        self.assertTrue(report.dominated, report.witness)
        self.assertTrue(report.monotone, report.monotonicity_violations)
        self.assertLess(series.values[-1], series.values[0])

    def test_monotone_functionals(self):
        """
        [F H^p]' >= 0 for F = K, so int H^(p+1) is nonincreasing.
        """
        for p in (0, 1, 2):
            series = compute_Y(self.traj, self.w, p + 1)
            allowance = 1e-10 * series.values[0]
            self.assertTrue(
                (np.diff(series.values) <= allowance).all(), f"p = {p}"
            )

    def test_inequality_at_critical_exponent(self):
        """
        H = u^(1/2): p1 = 3, q1 = 1, gamma1 = 3/2 and beta = q1/2 make
        both power bounds exact; Y = int u^2 decays with exponent 2/delta1.
        """
        params = OdiParams("no-h-prime", p1=3, gamma1=1.5, q1=1, beta=0.5)
        series = compute_Y(self.traj, self.w, params.y_exponent)
        report = verify_odi(series, params, slack=1e-2)
        self.assertTrue(report.holds, report.witness)
        self.assertGreater(report.measured_rate, 0)

    def test_inequality_with_auxiliary_functional(self):
        params = OdiParams("no-h-prime-z", p1=3, gamma1=1.5, q1=1, beta=1)
        (p0,) = params.z_exponents
        series = compute_Y(self.traj, self.w, params.y_exponent)
        z = compute_Z(self.traj, self.w, p0)
        self.assertTrue(
            (z.values <= z.values[0] * (1 + 1e-10)).all(),
        )
        bound = z_bound(series, p0, p_star=3, domain_measure=1.0)
        self.assertTrue((z.values <= bound * (1 + 1e-12)).all())

        report = verify_odi(series, params, [z], slack=1e-2)
        self.assertTrue(report.holds, report.witness)
        self.assertGreater(report.measured_rate, 0)

    def test_inequality_with_two_auxiliary_functionals(self):
        params = OdiParams(
            "extended", p1=3, gamma1=1.5, q1=1, beta1=1.5, beta2=1
        )
        self.assertEqual(params.z_exponents, [2.0, 1.0])
        series = compute_Y(self.traj, self.w, params.y_exponent)
        zs = [compute_Z(self.traj, self.w, p) for p in params.z_exponents]
        report = verify_odi(series, params, zs, slack=1e-2)
        self.assertTrue(report.holds, report.witness)
        self.assertGreater(report.measured_rate, 0)

    def test_bounded_inequality(self):
        """
        p = 1, gamma1 = 1: Y = int H^2 = int u decays with exponent 3/2.
        """
        params = OdiParams("bounded", p=1, gamma1=1)
        self.assertEqual(params.exponent, 1.5)
        series = compute_Y(self.traj, self.w, params.y_exponent)
        report = verify_odi(series, params, slack=1e-2)
        self.assertTrue(report.holds, report.witness)
        self.assertGreater(report.measured_rate, 0)

        env = DecayEnvelope(
            report.measured_rate, params.exponent, series.values[0]
        )
        check = verify_envelope(series, env, slack=1e-2)
        self.assertTrue(check.dominated, check.witness)

    def test_multi_term_inequality(self):
        params = OdiParams(
            "multi-term", p1=3, gamma1=1.5, q1=1, betas=(1.5, 1.25, 1)
        )
        self.assertEqual(params.z_exponents, [2.0, 1.5, 1.0])
        series = compute_Y(self.traj, self.w, params.y_exponent)
        zs = [compute_Z(self.traj, self.w, p) for p in params.z_exponents]
        report = verify_odi(series, params, zs, slack=1e-2)
        self.assertTrue(report.holds, report.witness)
        self.assertGreater(report.measured_rate, 0)

        analytic = OdiParams(
            "multi-term",
            p1=3,
            gamma1=1.5,
            q1=1,
            betas=(1.5, 1.25, 1),
            rate_mode="analytic",
            rate=10 * report.measured_rate,
        )
        self.assertFalse(verify_odi(series, analytic, zs).holds)
