"""
Contains tests for the experiment config validation
"""
from django.test import SimpleTestCase

from experiments.serializers import ExperimentConfigSerializer

from .configs import SELFSIMILAR_FRONT, SOLVE, STABILITY, config


class ExperimentConfigSerializerTest(SimpleTestCase):
    """
    Performs tests for ExperimentConfigSerializer
    """

    def errors(self, data):
        serializer = ExperimentConfigSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        return serializer.errors

    def test_empty_config(self):
        self.assertIn("kind", self.errors({}))

    def test_missing_sections_are_listed(self):
        errors = self.errors({"kind": "solve"})
        for name in ("coefficient", "mesh", "initial", "t_end"):
            self.assertIn(name, errors)

    def test_valid_config(self):
        serializer = ExperimentConfigSerializer(data=SOLVE)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["seed"], 0)

    def test_invalid_nested_objects(self):
        data = config(
            SOLVE,
            coefficient={"family": "power-law", "params": {"k": -1}},
        )
        self.assertIn("coefficient", self.errors(data))
        data = config(SOLVE, mesh={"geometry": "radial", "N": 5, "n_x": 11})
        self.assertIn("mesh", self.errors(data))

    def test_basic_model_exponent_domain(self):
        data = config(STABILITY)
        data["stability"]["odi"]["gamma"] = 1.0
        self.assertIn("stability", self.errors(data))

    def test_default_coefficient_only_for_basic_model(self):
        data = config(STABILITY)
        data["stability"]["odi"] = {
            "theorem": "no-h-prime",
            "p1": 3,
            "gamma1": 1.5,
        }
        self.assertIn("coefficient", self.errors(data))

    def test_front_parameters(self):
        data = config(
            SOLVE, kind="front", front={"ball": [0.7, 0.9], "epsilon": 1.5}
        )
        self.assertIn("front", self.errors(data))

    def test_selfsimilar_front_source(self):
        serializer = ExperimentConfigSerializer(data=SELFSIMILAR_FRONT)
        self.assertTrue(serializer.is_valid(), serializer.errors)

        data = config(SELFSIMILAR_FRONT)
        del data["counterexample"]
        self.assertIn("counterexample", self.errors(data))
        data = config(SELFSIMILAR_FRONT, counterexample={"lam": 3, "N": 2})
        self.assertIn("mesh", self.errors(data))

        data = config(SELFSIMILAR_FRONT)
        data["front"]["source"] = "solver"
        errors = self.errors(data)
        self.assertIn("coefficient", errors)
        self.assertIn("initial", errors)

    def test_comparison_nonlinearity(self):
        data = config(STABILITY)
        data["stability"]["comparison"] = {"nonlinearity": "power", "k": 1}
        self.assertIn("stability", self.errors(data))
        data["stability"]["comparison"]["beta"] = 2
        serializer = ExperimentConfigSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_test_functions(self):
        spec = {"center": 0.5, "width": 0.2, "t_start": 0.05, "t_stop": 0.01}
        data = config(SOLVE, test_functions=[spec])
        self.assertIn("test_functions", self.errors(data))
        spec["t_stop"] = 0.09
        data = config(SOLVE, test_functions=[spec])
        serializer = ExperimentConfigSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_nested_sweep(self):
        data = {
            "kind": "sweep",
            "sweep": {"base": {"kind": "sweep"}, "grid": {}},
        }
        self.assertIn("sweep", self.errors(data))
