import json

from rest_framework import serializers

from .schemas import TheoremCheck, VerificationReport


def dump(serializer: serializers.BaseSerializer) -> str:
    """Sorted keys keep identical invocations byte-identical."""
    return json.dumps(serializer.data, sort_keys=True, indent=2)


class TheoremCheckSerializer(serializers.Serializer):
    theorem = serializers.CharField()
    applicable = serializers.BooleanField()
    holds = serializers.BooleanField(allow_null=True)
    lhs = serializers.JSONField(allow_null=True)
    rhs = serializers.JSONField(allow_null=True)
    reason = serializers.CharField(allow_blank=True)
    witness = serializers.JSONField()
    gating = serializers.BooleanField(default=True)


class VerificationReportSerializer(serializers.Serializer):
    ideal_id = serializers.CharField()
    status = serializers.ChoiceField(choices=["PASS", "FAIL", "INCOMPLETE"])
    n = serializers.IntegerField()
    seed = serializers.IntegerField()
    position = serializers.JSONField()
    quantities = serializers.JSONField()
    checks = TheoremCheckSerializer(many=True)
    reasons = serializers.ListField(child=serializers.CharField())
    metadata = serializers.JSONField()

    @staticmethod
    def to_report(data: dict) -> VerificationReport:
        """Inverse of `.data`; used when reports come back from Celery workers."""
        checks = [TheoremCheck(**dict(c)) for c in data.get("checks", [])]
        return VerificationReport(
            ideal_id=data["ideal_id"],
            status=data["status"],
            n=data.get("n", 0),
            seed=data.get("seed", 0),
            position=dict(data.get("position") or {}),
            quantities=dict(data.get("quantities") or {}),
            checks=checks,
            reasons=list(data.get("reasons") or []),
            metadata=dict(data.get("metadata") or {}),
        )


class CorpusReportSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    count = serializers.IntegerField()
    passed = serializers.IntegerField()
    failed = serializers.IntegerField()
    incomplete = serializers.IntegerField()
    exercised_dimensions = serializers.JSONField()
    reports = VerificationReportSerializer(many=True)


class GroebnerBasisSerializer(serializers.Serializer):
    ring = serializers.ListField(child=serializers.CharField())
    generators = serializers.ListField(child=serializers.CharField())
    lt_ideal = serializers.ListField(child=serializers.CharField())
    max_degree = serializers.IntegerField()
    early_stop_degree = serializers.IntegerField(allow_null=True)
    trace = serializers.JSONField()
    truncate = serializers.IntegerField(allow_null=True)
    certified = serializers.BooleanField(allow_null=True)


class PommaretElementSerializer(serializers.Serializer):
    polynomial = serializers.CharField()
    leading_term = serializers.CharField()
    cls = serializers.IntegerField()
    multiplicative = serializers.ListField(child=serializers.CharField())


class PommaretSerializer(serializers.Serializer):
    ring = serializers.ListField(child=serializers.CharField())
    quasi_stable = serializers.BooleanField()
    elements = PommaretElementSerializer(many=True)
    reg = serializers.IntegerField(allow_null=True)
    depth = serializers.IntegerField(allow_null=True)
    obstruction = serializers.JSONField(allow_null=True)


class PositionSerializer(serializers.Serializer):
    quasi_stable = serializers.BooleanField()
    stable = serializers.BooleanField()
    strongly_stable = serializers.BooleanField()
    noether = serializers.BooleanField()
    dimension = serializers.IntegerField()
    deg_i = serializers.DictField(child=serializers.IntegerField())
    leading_ideal = serializers.ListField(child=serializers.CharField())
    obstruction = serializers.JSONField(allow_null=True)


class InvariantsSerializer(serializers.Serializer):
    hs_numerator = serializers.ListField(child=serializers.IntegerField())
    dimension = serializers.IntegerField()
    hp_coefficients = serializers.ListField(child=serializers.CharField())
    hilb = serializers.IntegerField()
    hf_table = serializers.DictField(child=serializers.IntegerField())
    reg = serializers.IntegerField()
    depth = serializers.IntegerField()
    regular_sequence = serializers.BooleanField(allow_null=True)


class GinSerializer(serializers.Serializer):
    ring = serializers.ListField(child=serializers.CharField())
    gin = serializers.ListField(child=serializers.CharField())
    seed = serializers.IntegerField()
    trials = serializers.IntegerField()
    strongly_stable = serializers.BooleanField()


class FSetLevelSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    dimension = serializers.IntegerField()
    degree = serializers.IntegerField()
    F_size = serializers.IntegerField()
    tildeF_size = serializers.IntegerField()


class FSetSerializer(serializers.Serializer):
    F = serializers.ListField(child=serializers.CharField())
    F_size = serializers.IntegerField()
    tildeF = serializers.ListField(child=serializers.CharField())
    tildeF_size = serializers.IntegerField()
    levels = FSetLevelSerializer(many=True)
    lemma = serializers.JSONField(allow_null=True)


class BoundValueSerializer(serializers.Serializer):
    formula_id = serializers.SerializerMethodField()
    value = serializers.SerializerMethodField()
    log2 = serializers.FloatField()
    materialized = serializers.BooleanField()
    exact = serializers.SerializerMethodField()

    def get_formula_id(self, obj) -> str:
        return obj.formula_id.value

    def get_value(self, obj) -> str:
        return obj.text

    def get_exact(self, obj) -> bool:
        return obj.exact is not None


class RemarkComparisonSerializer(serializers.Serializer):
    left = BoundValueSerializer()
    right = BoundValueSerializer()
    printed = serializers.CharField()
    computed = serializers.CharField()
    discrepancy = serializers.BooleanField()


class BoundsSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    d = serializers.IntegerField()
    D = serializers.IntegerField()
    depth = serializers.IntegerField()
    bounds = BoundValueSerializer(many=True)
    remarks = RemarkComparisonSerializer(many=True, required=False)


class TransformSerializer(serializers.Serializer):
    target = serializers.CharField()
    seed = serializers.IntegerField()
    retries = serializers.IntegerField()
    change = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    generators = serializers.ListField(child=serializers.CharField())
    leading_ideal = serializers.ListField(child=serializers.CharField())


class FixtureExpectationSerializer(serializers.Serializer):
    label = serializers.CharField()
    expected = serializers.JSONField()
    actual = serializers.JSONField()
    ok = serializers.BooleanField()


class FixtureOutcomeSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.CharField()
    expectations = FixtureExpectationSerializer(many=True)
    metadata = serializers.JSONField()
