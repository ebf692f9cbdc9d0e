"""
Contains the core serializers
"""
from rest_framework import serializers

from .exceptions import LabError
from .models import Verdict


class DomainObjectSerializer(serializers.Serializer):
    """
    Base serializer for JSON specs that describe a domain object.

    Concrete serializers implement `build` to turn validated attributes
    into the object. Invariant violations raised while building are
    reported as validation errors, and `save()` returns the built object.
    """

    def build(self, attrs: dict):
        raise NotImplementedError(
            "Domain object serializers must implement `build`"
        )

    def validate(self, attrs):
        try:
            self.build(attrs)
        except LabError as exc:
            raise serializers.ValidationError(str(exc))
        return super().validate(attrs)

    def create(self, validated_data):
        return self.build(validated_data)


class ConditionReportSerializer(serializers.Serializer):
    """
    Core condition report serializer
    """

    condition = serializers.CharField()
    verdict = serializers.ChoiceField(choices=Verdict.CHOICES)
    constants = serializers.DictField()
    # Only violated reports carry a witness
    witness = serializers.DictField(allow_null=True)
    grid = serializers.DictField()
