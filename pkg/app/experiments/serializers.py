"""
Contains the experiment configuration serializers
"""
from rest_framework import serializers

from coefficients.serializers import CoefficientSerializer
from pde.serializers import (
    InitialProfileSerializer,
    MeshSerializer,
    TestFunctionSerializer,
)
from stability.serializers import ComparisonSerializer, OdiParamsSerializer
from weights.serializers import (
    AssumptionParamsSerializer,
    WeightPairSerializer,
)

KINDS = (
    "analyze-coefficient",
    "solve",
    "front",
    "stability",
    "counterexample",
    "sweep",
)


class TolerancesSerializer(serializers.Serializer):
    """
    Overrides of the LAB defaults for a single run
    """

    CFL_SAFE = serializers.FloatField(
        required=False, min_value=1e-6, max_value=0.5
    )
    MIN_DT = serializers.FloatField(required=False, min_value=0)
    QUAD_TOL = serializers.FloatField(required=False, min_value=1e-14)
    QUAD_MAX_DOUBLINGS = serializers.IntegerField(required=False, min_value=1)
    SUPPORT_THRESHOLD = serializers.FloatField(required=False, min_value=0)
    SUPPORT_DECADES = serializers.IntegerField(required=False, min_value=1)
    STABILIZATION_RTOL = serializers.FloatField(required=False, min_value=0)
    GROWTH_DECADES = serializers.IntegerField(required=False, min_value=1)
    FD_DISAGREEMENT = serializers.FloatField(required=False, min_value=0)
    ODE_RTOL = serializers.FloatField(required=False, min_value=1e-14)


class ConditionsSerializer(serializers.Serializer):
    """
    Grids of the coefficient condition checks
    """

    mu_grid = serializers.ListField(
        child=serializers.FloatField(min_value=0),
        required=False,
        default=list,
    )
    s_range = serializers.ListField(
        child=serializers.FloatField(min_value=0),
        min_length=2,
        max_length=2,
        required=False,
    )
    c_min = serializers.FloatField(required=False, min_value=0)
    n_range = serializers.ListField(
        child=serializers.IntegerField(min_value=1),
        min_length=2,
        max_length=2,
        required=False,
        default=lambda: [8, 28],
    )


class FrontConfigSerializer(serializers.Serializer):
    """
    Ball and threshold of the front measurement, on a solver run or on
    the sampled exact self-similar solution
    """

    SOURCES = ("solver", "selfsimilar")

    source = serializers.ChoiceField(
        choices=SOURCES, required=False, default="solver"
    )
    ball = serializers.ListField(
        child=serializers.FloatField(), min_length=2, max_length=2
    )
    epsilon = serializers.FloatField()
    eps_supp = serializers.FloatField(required=False)
    decades = serializers.IntegerField(required=False, min_value=1)

    def validate(self, attrs):
        lo, hi = attrs["ball"]
        if not lo < hi:
            raise serializers.ValidationError({"ball": "Need lo < hi."})
        if not 0 < attrs["epsilon"] < 1:
            raise serializers.ValidationError(
                {"epsilon": "Must lie in (0, 1)."}
            )
        return attrs


class StabilityConfigSerializer(serializers.Serializer):
    """
    Inequality parameters, the basic model scale K, the embedding
    constant c0 and the slacks of the envelope and inequality checks
    """

    odi = OdiParamsSerializer()
    K = serializers.FloatField(required=False, default=1.0)
    c0 = serializers.FloatField(required=False, default=0.5)
    slack = serializers.FloatField(required=False, default=0.05, min_value=0)
    odi_slack = serializers.FloatField(
        required=False, default=1e-2, min_value=0
    )
    poincare_samples = serializers.IntegerField(
        required=False, default=200, min_value=1
    )
    comparison = ComparisonSerializer(required=False)

    def validate(self, attrs):
        if not (attrs["K"] > 0 and attrs["c0"] > 0):
            raise serializers.ValidationError("K and c0 must be > 0.")
        return attrs


class CounterexampleConfigSerializer(serializers.Serializer):
    lam = serializers.FloatField()
    N = serializers.IntegerField(min_value=1)
    n_s = serializers.IntegerField(required=False, default=60, min_value=2)
    n_t = serializers.IntegerField(required=False, default=9, min_value=2)

    def validate(self, attrs):
        if not attrs["lam"] > 2:
            raise serializers.ValidationError({"lam": "Must be > 2."})
        return attrs


class SweepConfigSerializer(serializers.Serializer):
    """
    {"base": <experiment config>, "grid": {"dotted.path": [values]}}
    """

    base = serializers.DictField()
    grid = serializers.DictField(
        child=serializers.ListField(allow_empty=True), required=False
    )

    def validate_base(self, value):
        if value.get("kind") == "sweep":
            raise serializers.ValidationError("Sweeps do not nest.")
        return value


class ExperimentConfigSerializer(serializers.Serializer):
    """
    One experiment: its kind and the sections that kind needs
    """

    REQUIRED = {
        "analyze-coefficient": ("coefficient",),
        "solve": ("coefficient", "mesh", "initial", "t_end"),
        "front": ("mesh", "t_end", "front"),
        "stability": ("mesh", "initial", "t_end", "stability"),
        "counterexample": ("counterexample",),
        "sweep": ("sweep",),
    }

    kind = serializers.ChoiceField(choices=KINDS)
    seed = serializers.IntegerField(required=False, default=0, min_value=0)
    coefficient = CoefficientSerializer(required=False)
    weight = WeightPairSerializer(required=False)
    assumptions = AssumptionParamsSerializer(many=True, required=False)
    conditions = ConditionsSerializer(required=False)
    mesh = MeshSerializer(required=False)
    initial = InitialProfileSerializer(required=False)
    t_end = serializers.FloatField(required=False, min_value=0)
    output_times = serializers.ListField(
        child=serializers.FloatField(min_value=0), required=False
    )
    test_functions = TestFunctionSerializer(many=True, required=False)
    front = FrontConfigSerializer(required=False)
    stability = StabilityConfigSerializer(required=False)
    counterexample = CounterexampleConfigSerializer(required=False)
    sweep = SweepConfigSerializer(required=False)
    tolerances = TolerancesSerializer(required=False)
    plots = serializers.BooleanField(required=False, default=True)

    def validate(self, attrs):
        missing = [
            name for name in self.REQUIRED[attrs["kind"]] if name not in attrs
        ]
        if missing:
            raise serializers.ValidationError(
                {name: "This field is required." for name in missing}
            )
        if attrs["kind"] == "front":
            self._validate_front_source(attrs)
        if "assumptions" in attrs and "weight" not in attrs:
            raise serializers.ValidationError(
                {"weight": "Assumption checks need a weight pair."}
            )
        if attrs["kind"] == "stability" and "coefficient" not in attrs:
            theorem = attrs["stability"]["odi"]["theorem"]
            if theorem != "basic":
                raise serializers.ValidationError(
                    {"coefficient": "Only the basic model has a default."}
                )
        if attrs["kind"] == "stability" and "coefficient" in attrs:
            if (
                attrs["stability"]["odi"]["theorem"] != "basic"
                and "weight" not in attrs
            ):
                raise serializers.ValidationError(
                    {"weight": "This field is required."}
                )
        if "t_end" in attrs and not attrs["t_end"] > 0:
            raise serializers.ValidationError({"t_end": "Must be > 0."})
        return attrs

    def _validate_front_source(self, attrs):
        if attrs["front"]["source"] == "solver":
            needed = ("coefficient", "initial")
        else:
            needed = ("counterexample",)
        missing = [name for name in needed if name not in attrs]
        if missing:
            raise serializers.ValidationError(
                {name: "This field is required." for name in missing}
            )
        if attrs["front"]["source"] == "selfsimilar":
            mesh, N = attrs["mesh"], attrs["counterexample"]["N"]
            dimension = mesh["N"] if mesh["geometry"] == "radial" else 1
            if dimension != N:
                raise serializers.ValidationError(
                    {"mesh": f"The exact solution needs N = {N}."}
                )


def validate_config(data: dict) -> dict:
    """
    Validated attributes of an experiment config.

    Raises
    ------
    rest_framework.serializers.ValidationError
    """
    serializer = ExperimentConfigSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data
