"""
Contains tests for the improper integral I(s)
"""
import math

import numpy as np
from django.test import SimpleTestCase

from coefficients.models import (
    PowerLawCoefficient,
    TabulatedCoefficient,
    make_counterexample,
)
from coefficients.quadrature import eval_aI, eval_I
from core.exceptions import DivergenceError, DomainError


class EvalITest(SimpleTestCase):
    """
    Performs tests for the quadrature of I(s)
    """

    def test_power_law_values(self):
        """
        I(s) = 1/(k rho s^rho): 2 for k=rho=1 at 0.5, 1 for k=2, rho=0.5 at 1
        """
        result = eval_I(PowerLawCoefficient(1, 1), 0.5)
        self.assertAlmostEqual(result.value, 2.0, places=8)
        self.assertGreaterEqual(result.error, 0.0)
        self.assertAlmostEqual(
            eval_I(PowerLawCoefficient(2, 0.5), 1.0).value, 1.0, places=8
        )

    def test_power_law_constancy(self):
        """
        |a(s)I(s) - 1/rho| < 1e-5 on [1e-6, 1e2] through quadrature only
        """
        s = np.logspace(-6, 2, 41)
        for rho in (0.5, 1.0, 2.0):
            values = eval_aI(PowerLawCoefficient(1.3, rho), s)
            self.assertLess(np.abs(values - 1 / rho).max(), 1e-5)

    def test_power_law_tolerance_bound(self):
        """
        |a(s)I(s) - 1/rho| <= 10 tol on [1e-8, 1e6]
        """
        tol = 1e-10
        s = np.logspace(-8, 6, 29)
        coeff = PowerLawCoefficient(0.7, 1.5)
        values = eval_aI(coeff, s, tol)
        self.assertLessEqual(
            np.abs(values - 1 / 1.5).max(), 10 * tol / 1.5 + 1e-12
        )

    def test_agrees_with_closed_form(self):
        coeff = PowerLawCoefficient(3, 0.25)
        for s in (1e-7, 0.3, 1.0, 50.0):
            exact = float(coeff.closed_form_I(s))
            self.assertAlmostEqual(
                eval_I(coeff, s).value / exact, 1.0, places=8
            )

    def test_counterexample_tail_constant(self):
        """
        c_star = I(u_star) is finite and the logarithmic closed form
        matches the quadrature below u_star.
        """
        coeff = make_counterexample(3, 2)
        c_star = eval_I(coeff, coeff.u_star).value
        self.assertTrue(math.isfinite(c_star))
        self.assertGreater(c_star, 0)
        for s in (1e-12, 1e-6, 1e-3, 0.1):
            exact = float(coeff.closed_form_I(s))
            self.assertAlmostEqual(
                eval_I(coeff, s).value / exact, 1.0, places=8
            )

    def test_strictly_decreasing(self):
        s = np.logspace(-10, 4, 57)
        for coeff in (
            PowerLawCoefficient(1, 0.5),
            make_counterexample(2.5, 1),
        ):
            values = [eval_I(coeff, x).value for x in s]
            self.assertTrue((np.diff(values) < 0).all())

    def test_constant_tail_diverges(self):
        """
        Constant extrapolation makes the tail logarithmically divergent.
        """
        coeff = TabulatedCoefficient([0, 1], [0, 1])
        with self.assertRaises(DivergenceError) as context:
            eval_I(coeff, 0.5)
        self.assertGreater(context.exception.partial_sum, 0)
        self.assertGreater(context.exception.upper_limit, 0)

    def test_nonpositive_argument(self):
        with self.assertRaises(DomainError):
            eval_I(PowerLawCoefficient(1, 1), 0.0)
