"""
Contains the mesh, profile and test function serializers
"""
from rest_framework import serializers

from core.serializers import DomainObjectSerializer

from .models import Mesh
from .weak_form import TestFunction
from .profiles import PROFILES


class MeshSerializer(DomainObjectSerializer):
    """
    {"geometry": "interval", "x_lo": ..., "x_hi": ..., "n_x": ...} or
    {"geometry": "radial", "R": ..., "N": ..., "n_x": ...}
    """

    geometry = serializers.ChoiceField(choices=["interval", "radial"])
    n_x = serializers.IntegerField(min_value=3)
    x_lo = serializers.FloatField(required=False, default=0.0)
    x_hi = serializers.FloatField(required=False, default=1.0)
    R = serializers.FloatField(required=False)
    N = serializers.IntegerField(required=False, default=1, min_value=1)

    def build(self, attrs):
        if attrs["geometry"] == "radial":
            return Mesh.radial(
                attrs.get("R", attrs["x_hi"]), attrs["N"], attrs["n_x"]
            )
        return Mesh.interval(attrs["x_lo"], attrs["x_hi"], attrs["n_x"])

    def to_representation(self, instance):
        return instance.to_dict()


class InitialProfileSerializer(serializers.Serializer):
    """
    Named initial profile: bump(center, width, height), sine(k) or a
    table (x, u)
    """

    kind = serializers.ChoiceField(choices=sorted(PROFILES))
    center = serializers.FloatField(required=False)
    width = serializers.FloatField(required=False, min_value=0)
    height = serializers.FloatField(required=False, min_value=0)
    k = serializers.IntegerField(required=False, min_value=1)
    amplitude = serializers.FloatField(required=False, min_value=0)
    x = serializers.ListField(child=serializers.FloatField(), required=False)
    u = serializers.ListField(
        child=serializers.FloatField(min_value=0), required=False
    )

    REQUIRED = {
        "bump": ("center", "width"),
        "sine": (),
        "table": ("x", "u"),
    }

    def validate(self, attrs):
        missing = [
            name for name in self.REQUIRED[attrs["kind"]] if name not in attrs
        ]
        if missing:
            raise serializers.ValidationError(
                {name: "This field is required." for name in missing}
            )
        return attrs


class TestFunctionSerializer(DomainObjectSerializer):
    """
    Bump test function of the weak-form check, supported on
    [center - width, center + width] x [t_start, t_stop]
    """

    __test__ = False

    center = serializers.FloatField()
    width = serializers.FloatField()
    t_start = serializers.FloatField(min_value=0)
    t_stop = serializers.FloatField()
    amplitude = serializers.FloatField(required=False, default=1.0)

    def build(self, attrs):
        return TestFunction(**attrs)
