"""
Contains the coefficient serializers
"""
from rest_framework import serializers

from core.serializers import DomainObjectSerializer

from .models import CoefficientFactory


class CoefficientSerializer(DomainObjectSerializer):
    """
    {"family": ..., "params": {...}}, tabulated tables in "s" and "a"
    """

    family = serializers.ChoiceField(
        choices=sorted(CoefficientFactory.FAMILIES)
    )
    params = serializers.DictField(required=False, default=dict)
    s = serializers.ListField(
        child=serializers.FloatField(min_value=0),
        required=False,
    )
    a = serializers.ListField(
        child=serializers.FloatField(min_value=0),
        required=False,
    )

    def validate(self, attrs):
        if attrs["family"] == "tabulated" and not (
            "s" in attrs and "a" in attrs
        ):
            raise serializers.ValidationError(
                "A tabulated coefficient needs the tables 's' and 'a'"
            )
        return super().validate(attrs)

    def build(self, attrs):
        return CoefficientFactory.from_spec(attrs)

    def to_representation(self, instance):
        return instance.to_dict()
