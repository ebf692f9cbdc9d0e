"""
Contains the weight and assumption serializers
"""
from rest_framework import serializers

from core.serializers import DomainObjectSerializer

from .models import AssumptionParams, CustomWeight, WeightPairFactory


class WeightPairSerializer(DomainObjectSerializer):
    """
    {"family": "power", "gamma": ..., "scale": ...} or
    {"family": "custom", "h": "<expression id>"}
    """

    family = serializers.ChoiceField(choices=["power", "custom"])
    gamma = serializers.FloatField(required=False)
    scale = serializers.FloatField(required=False, default=1.0)
    h = serializers.ChoiceField(
        choices=sorted(CustomWeight.EXPRESSIONS),
        required=False,
    )

    def build(self, attrs):
        return WeightPairFactory.from_spec(attrs)

    def to_representation(self, instance):
        return instance.to_dict()


class AssumptionParamsSerializer(DomainObjectSerializer):
    """
    Exponents and bounds of one structural assumption
    """

    assumption = serializers.ChoiceField(
        choices=sorted(AssumptionParams.REQUIRED)
    )
    gamma1 = serializers.FloatField(required=False)
    p = serializers.FloatField(required=False)
    p1 = serializers.FloatField(required=False)
    q1 = serializers.FloatField(required=False)
    beta = serializers.FloatField(required=False)
    beta1 = serializers.FloatField(required=False)
    beta2 = serializers.FloatField(required=False)
    betas = serializers.ListField(
        child=serializers.FloatField(),
        required=False,
    )
    M = serializers.FloatField(required=False)
    s_max = serializers.FloatField(required=False)

    def build(self, attrs):
        return AssumptionParams(**attrs)

    def to_representation(self, instance):
        return instance.to_dict()
