"""
Contains the oracle serializers
"""
from rest_framework import serializers

from core.serializers import DomainObjectSerializer

from .models import SelfSimilarSolution


class SelfSimilarSolutionSerializer(DomainObjectSerializer):
    lam = serializers.FloatField()
    N = serializers.IntegerField(min_value=1)

    def build(self, attrs):
        return SelfSimilarSolution(attrs["lam"], attrs["N"])

    def to_representation(self, instance):
        return instance.to_dict()
