"""
Contains tests for the decay envelopes and comparison equations
"""
import math

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DomainError, ParameterError
from stability.envelopes import (
    analytic_rate_basic,
    bounded_rate,
    comparison_rate,
    envelope_value,
    generalized_odi_envelope,
    ode_comparison,
)
from stability.models import DecayEnvelope


class EnvelopeValueTest(SimpleTestCase):
    """
    Performs tests for the closed-form envelope
    """

    def test_direct_substitution(self):
        env = DecayEnvelope(k=1, beta=2, Y0=1, t0=3)
        self.assertAlmostEqual(envelope_value(env, 4), 0.5, places=14)

    def test_equals_initial_value_at_t0(self):
        env = DecayEnvelope(k=2, beta=1.5, Y0=4)
        self.assertAlmostEqual(envelope_value(env, 0), 4, places=12)

    def test_zero_initial_value(self):
        env = DecayEnvelope(k=1, beta=2, Y0=0)
        np.testing.assert_array_equal(
            envelope_value(env, np.array([0.0, 1.0, 1e6])), 0.0
        )

    def test_nonincreasing_and_vanishing(self):
        env = DecayEnvelope(k=0.5, beta=1.2, Y0=3, t0=1)
        times = 1 + 10.0 ** np.arange(0, 7)
        values = envelope_value(env, times)
        self.assertTrue((np.diff(values) < 0).all())
        self.assertLess(values[-1], 1e-20)

    def test_before_t0(self):
        env = DecayEnvelope(k=1, beta=2, Y0=1, t0=1)
        with self.assertRaises(DomainError):
            envelope_value(env, 0.5)

    def test_parameter_domain(self):
        DecayEnvelope(k=1, beta=1.0001, Y0=1)
        with self.assertRaises(ParameterError):
            DecayEnvelope(k=1, beta=1, Y0=1)
        with self.assertRaises(ParameterError):
            DecayEnvelope(k=0, beta=2, Y0=1)
        with self.assertRaises(ParameterError):
            DecayEnvelope(k=1, beta=2, Y0=-1)


class OdeComparisonTest(SimpleTestCase):
    """
    Performs tests of the envelope against the integrated equality case
    """

    def test_quadratic_decay(self):
        env = DecayEnvelope(k=1, beta=2, Y0=1)
        self.assertLess(ode_comparison(env, 10), 1e-6)

    def test_cubic_decay(self):
        env = DecayEnvelope(k=0.1, beta=3, Y0=5)
        self.assertLess(ode_comparison(env, 10), 1e-6)

    def test_exponent_close_to_one(self):
        env = DecayEnvelope(k=1, beta=1.0001, Y0=1)
        self.assertLess(ode_comparison(env, 5), 1e-6)

    def test_random_parameters(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            env = DecayEnvelope(
                k=rng.uniform(0.1, 5),
                beta=1 + rng.uniform(1e-3, 3),
                Y0=rng.uniform(0.1, 10),
            )
            self.assertLess(ode_comparison(env, 10), 1e-6, env)

    def test_zero_initial_value(self):
        with self.assertRaises(DomainError):
            ode_comparison(DecayEnvelope(k=1, beta=2, Y0=0), 1)


class RateTest(SimpleTestCase):
    """
    Performs tests for the analytic rate constants
    """

    def test_basic_model_rate(self):
        k1, beta = analytic_rate_basic(K=1, gamma=0.5, m=1.5, c0=1)
        self.assertAlmostEqual(k1, 3.0, places=12)
        self.assertAlmostEqual(beta, 4 / 3, places=12)

    def test_basic_model_boundary_exponent(self):
        k1, _ = analytic_rate_basic(K=1, gamma=0.25, m=1.75, c0=0.5)
        self.assertGreater(k1, 0)

    def test_basic_model_domain(self):
        with self.assertRaises(ParameterError):
            analytic_rate_basic(K=1, gamma=0, m=2, c0=1)
        with self.assertRaises(ParameterError):
            analytic_rate_basic(K=1, gamma=0.5, m=1.4, c0=1)
        with self.assertRaises(ParameterError):
            analytic_rate_basic(K=-1, gamma=0.5, m=1.5, c0=1)

    def test_bounded_rate(self):
        """
        p = gamma1 = 1: q = 4/3, K1 = 9/16, k = 2/K1.
        """
        k, beta = bounded_rate(p=1, gamma1=1, c1=1, c2=1, c0=1)
        self.assertAlmostEqual(k, 32 / 9, places=12)
        self.assertAlmostEqual(beta, 1.5, places=12)


class GeneralizedEnvelopeTest(SimpleTestCase):
    """
    Performs tests for the comparison equation Y' = -rate(Y)
    """

    def test_power_nonlinearity(self):
        env = DecayEnvelope(k=1.5, beta=1.5, Y0=2)
        series = generalized_odi_envelope(
            lambda y: env.k * y**env.beta, env.Y0, 5
        )
        exact = envelope_value(env, series.times)
        np.testing.assert_allclose(series.values, exact, rtol=1e-6)

    def test_zero_nonlinearity(self):
        series = generalized_odi_envelope(lambda y: 0.0, 0.7, 3)
        np.testing.assert_allclose(series.values, 0.7, rtol=1e-12)

    def test_logarithmic_nonlinearity(self):
        """
        Y' = -Y |ln Y| from 0.5 is 0.5^(e^t).
        """

        def rate(y):
            return y * abs(math.log(y)) if y > 0 else 0.0

        series = generalized_odi_envelope(rate, 0.5, 2)
        self.assertTrue((np.diff(series.values) < 0).all())
        self.assertTrue((series.values > 0).all())
        np.testing.assert_allclose(
            series.values, 0.5 ** np.exp(series.times), rtol=1e-6
        )

    def test_invalid_nonlinearity(self):
        with self.assertRaises(DomainError):
            generalized_odi_envelope(lambda y: y - 0.1, 1, 1)
        with self.assertRaises(DomainError):
            generalized_odi_envelope(lambda y: -y, 1, 1)

    def test_named_log_nonlinearity(self):
        times = [0.0, 0.5, 1.0, 2.0]
        series = generalized_odi_envelope(
            comparison_rate("log", 1), 0.5, 2, times=times
        )
        np.testing.assert_allclose(series.times, times)
        np.testing.assert_allclose(
            series.values, 0.5 ** np.exp(times), rtol=1e-6
        )
        self.assertEqual(series.descriptor["comparison"], "log")

    def test_times_outside_interval(self):
        with self.assertRaises(DomainError):
            generalized_odi_envelope(
                comparison_rate("power", 1, 2), 1, 1, times=[0, 2]
            )

    def test_comparison_parameters(self):
        with self.assertRaises(ParameterError):
            comparison_rate("power", 1)
        with self.assertRaises(ParameterError):
            comparison_rate("power", 1, 0.5)
        with self.assertRaises(ParameterError):
            comparison_rate("log", 0)
        with self.assertRaises(ParameterError):
            comparison_rate("exp", 1)
