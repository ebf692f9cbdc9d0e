"""
Contains the differential inequality serializers
"""
from rest_framework import serializers

from core.serializers import DomainObjectSerializer

from .envelopes import COMPARISONS, comparison_rate
from .models import OdiParams


class OdiParamsSerializer(DomainObjectSerializer):
    """
    Theorem id, the exponents it needs and the rate mode
    """

    theorem = serializers.ChoiceField(choices=sorted(OdiParams.THEOREMS))
    m = serializers.FloatField(required=False)
    gamma = serializers.FloatField(required=False)
    p = serializers.FloatField(required=False)
    gamma1 = serializers.FloatField(required=False)
    p1 = serializers.FloatField(required=False)
    q1 = serializers.FloatField(required=False)
    beta = serializers.FloatField(required=False)
    beta1 = serializers.FloatField(required=False)
    beta2 = serializers.FloatField(required=False)
    betas = serializers.ListField(
        child=serializers.FloatField(),
        required=False,
    )
    N = serializers.IntegerField(required=False, min_value=1, default=1)
    rate_mode = serializers.ChoiceField(
        choices=[OdiParams.FITTED, OdiParams.ANALYTIC],
        required=False,
        default=OdiParams.FITTED,
    )
    rate = serializers.FloatField(required=False)

    def build(self, attrs):
        attrs = dict(attrs)
        attrs["betas"] = tuple(attrs.get("betas", ()))
        return OdiParams(**attrs)

    def to_representation(self, instance):
        return instance.to_dict()


class ComparisonSerializer(DomainObjectSerializer):
    """
    Nonlinearity of the comparison equation Y' = -rate(Y): k Y^beta
    ("power") or k Y |ln Y| ("log")
    """

    nonlinearity = serializers.ChoiceField(choices=COMPARISONS)
    k = serializers.FloatField()
    beta = serializers.FloatField(required=False)

    def build(self, attrs):
        return comparison_rate(
            attrs["nonlinearity"], attrs["k"], attrs.get("beta")
        )
