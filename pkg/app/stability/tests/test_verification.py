"""
Contains tests for the envelope and differential inequality checks
"""
import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DomainError, ParameterError
from stability.envelopes import (
    comparison_rate,
    envelope_value,
    generalized_odi_envelope,
)
from stability.models import DecayEnvelope, FunctionalSeries, OdiParams
from stability.verification import (
    verify_comparison,
    verify_envelope,
    verify_odi,
    z_bound,
)


def envelope_series(env, t_end=5.0, n=201):
    times = np.linspace(env.t0, env.t0 + t_end, n)
    return FunctionalSeries(times, envelope_value(env, times))


class VerifyEnvelopeTest(SimpleTestCase):
    """
    Performs tests for envelope dominance
    """

    def setUp(self):
        self.env = DecayEnvelope(k=1, beta=2, Y0=1)

    def test_envelope_dominates_itself(self):
        report = verify_envelope(envelope_series(self.env), self.env)
        self.assertTrue(report.dominated)
        self.assertTrue(report.monotone)
        self.assertTrue(report.zero_persistent)
        self.assertIsNone(report.witness)

    def test_inflated_series(self):
        exact = envelope_series(self.env)
        series = FunctionalSeries(exact.times, 2 * exact.values)
        report = verify_envelope(series, self.env)
        self.assertFalse(report.dominated)
        self.assertEqual(report.witness["t"], 0.0)
        self.assertEqual(report.witness["value"], 2.0)
        self.assertEqual(report.witness["bound"], 1.0)

    def test_tail_exponent(self):
        """
        1/(1 + t) decays like t^-1.
        """
        series = envelope_series(self.env, t_end=1e4, n=1001)
        report = verify_envelope(series, self.env)
        self.assertAlmostEqual(report.tail_exponent, -1, delta=0.01)

    def test_monotonicity_and_zero_persistence(self):
        series = FunctionalSeries([0, 1, 2, 3], [1.0, 0.0, 0.1, 0.0])
        report = verify_envelope(series, self.env)
        self.assertFalse(report.monotone)
        self.assertEqual(report.monotonicity_violations, [2.0])
        self.assertFalse(report.zero_persistent)

        series = FunctionalSeries([0, 1, 2, 3], [1.0, 0.2, 0.0, 0.0])
        self.assertTrue(verify_envelope(series, self.env).zero_persistent)

    def test_series_before_t0(self):
        env = DecayEnvelope(k=1, beta=2, Y0=1, t0=1)
        with self.assertRaises(DomainError):
            verify_envelope(envelope_series(self.env), env)


class VerifyComparisonTest(SimpleTestCase):
    """
    Performs tests for dominance by a sampled comparison solution
    """

    def setUp(self):
        self.series = envelope_series(DecayEnvelope(k=1, beta=2, Y0=1))

    def test_power_comparison_matches_envelope(self):
        comparison = generalized_odi_envelope(
            comparison_rate("power", 1, 2),
            1.0,
            self.series.times[-1],
            times=self.series.times,
        )
        report = verify_comparison(self.series, comparison, slack=1e-6)
        self.assertTrue(report.dominated, report.witness)
        self.assertTrue(report.monotone)

    def test_faster_comparison_fails(self):
        comparison = generalized_odi_envelope(
            comparison_rate("power", 4, 2),
            1.0,
            self.series.times[-1],
            times=self.series.times,
        )
        report = verify_comparison(self.series, comparison)
        self.assertFalse(report.dominated)
        self.assertGreater(report.witness["t"], 0)
        self.assertGreater(report.witness["value"], report.witness["bound"])

    def test_mismatched_times(self):
        comparison = FunctionalSeries([0, 1], [1.0, 0.5])
        with self.assertRaises(DomainError):
            verify_comparison(self.series, comparison)


class OdiParamsTest(SimpleTestCase):
    """
    Performs tests for the derived exponents
    """

    def test_one_dimensional_exponents(self):
        params = OdiParams("no-h-prime-z", p1=3, gamma1=1.5, q1=1, beta=1)
        self.assertAlmostEqual(params.delta1, 1.6)
        self.assertEqual(params.delta2, 1.0)
        self.assertAlmostEqual(params.exponent, 1.25)
        self.assertAlmostEqual(params.z_exponents[0], 1.0)
        self.assertAlmostEqual(params.weight_exponent, 1.0)

    def test_higher_dimensional_delta2(self):
        """
        N = 3: delta1 = 1.6 > 3/2, so delta2 = 3 delta1/(3 + delta1).
        """
        params = OdiParams(
            "no-h-prime-z", p1=3, gamma1=1.5, q1=1, beta=1, N=3
        )
        self.assertAlmostEqual(params.delta2, 4.8 / 4.6)

    def test_delta1_out_of_range(self):
        with self.assertRaises(ParameterError):
            OdiParams("no-h-prime", p1=3, gamma1=1)
        with self.assertRaises(ParameterError):
            OdiParams("no-h-prime", p1=0.5, gamma1=1)

    def test_missing_and_inconsistent_exponents(self):
        with self.assertRaises(ParameterError):
            OdiParams("bounded", p=1)
        with self.assertRaises(ParameterError):
            OdiParams(
                "extended", p1=3, gamma1=1.5, q1=1, beta1=0.6, beta2=0.8
            )
        with self.assertRaises(ParameterError):
            OdiParams("basic", m=1.5, gamma=0.5, rate_mode="analytic")

    def test_extended_exponents_ordered(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            q1 = rng.uniform(0.1, 2)
            beta2 = q1 / 2 + rng.uniform(0.01, 1)
            beta1 = beta2 + rng.uniform(0.01, 1)
            params = OdiParams(
                "extended",
                p1=3,
                gamma1=1.5,
                q1=q1,
                beta1=beta1,
                beta2=beta2,
                N=int(rng.integers(1, 4)),
            )
            p2, p3 = params.z_exponents
            self.assertGreater(p2, p3)


class VerifyOdiTest(SimpleTestCase):
    """
    Performs tests for the sampled differential inequality
    """

    def setUp(self):
        self.env = DecayEnvelope(k=2, beta=1.25, Y0=1)
        self.series = envelope_series(self.env)
        self.zero = FunctionalSeries(
            self.series.times, np.zeros(len(self.series))
        )

    def test_envelope_equality_case(self):
        params = OdiParams(
            "no-h-prime-z",
            p1=3,
            gamma1=1.5,
            q1=1,
            beta=1,
            rate_mode="analytic",
            rate=self.env.k,
        )
        report = verify_odi(self.series, params, [self.zero])
        self.assertTrue(report.holds)
        self.assertIsNone(report.witness)

    def test_measured_rate(self):
        params = OdiParams("no-h-prime", p1=3, gamma1=1.5)
        report = verify_odi(self.series, params)
        self.assertTrue(report.holds)
        self.assertGreaterEqual(report.measured_rate, (1 - 1e-6) * 2)
        self.assertEqual(report.rate, report.measured_rate)

    def test_rate_too_large(self):
        params = OdiParams(
            "no-h-prime", p1=3, gamma1=1.5, rate_mode="analytic", rate=4
        )
        report = verify_odi(self.series, params)
        self.assertFalse(report.holds)
        self.assertIn("t", report.witness)

    def test_growing_functional_fails(self):
        times = np.linspace(0, 1, 21)
        growing = FunctionalSeries(times, 1 + times)
        zero = FunctionalSeries(times, np.zeros(times.size))
        params = OdiParams("no-h-prime-z", p1=3, gamma1=1.5, q1=1, beta=1)
        report = verify_odi(growing, params, [zero])
        self.assertLess(report.measured_rate, 0)
        self.assertFalse(report.holds)
        self.assertEqual(report.witness["bound"], 0.0)
        self.assertGreater(report.witness["value"], 0)

    def test_too_few_samples(self):
        params = OdiParams("no-h-prime", p1=3, gamma1=1.5)
        with self.assertRaises(DomainError):
            verify_odi(FunctionalSeries([0, 1], [1, 0.5]), params)

    def test_wrong_number_of_z_series(self):
        params = OdiParams(
            "extended", p1=3, gamma1=1.5, q1=1, beta1=1.5, beta2=1
        )
        with self.assertRaises(ParameterError):
            verify_odi(self.series, params, [self.zero])


class ZBoundTest(SimpleTestCase):
    def test_hoelder_bound(self):
        series = FunctionalSeries([0, 1], [16.0, 1.0])
        bound = z_bound(series, p0=1, p_star=3, domain_measure=2)
        np.testing.assert_allclose(bound, [2 * 2**0.75, 2**0.75])

    def test_exponent_domain(self):
        series = FunctionalSeries([0, 1], [1.0, 1.0])
        with self.assertRaises(ParameterError):
            z_bound(series, p0=5, p_star=3, domain_measure=1)
