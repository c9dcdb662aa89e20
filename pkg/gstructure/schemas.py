"""
JSON wire format.

Result objects expose ``dumps()`` returning the dump of their schema;
the cli serializes that dict with sorted keys.
"""
from gstructure.classify import (
    DivisibilityTrace, HomDescriptor, HomKind, ReductionQuery, ReductionVerdict, Reason, Summand,
)
from gstructure.james import FactoredInteger
from gstructure.kocheck import KOStatus
from gstructure.reality import GroupDescriptor, GroupFamily, RealityType
from gstructure.weyl import AlgebraType, DominantWeight
from marshmallow import Schema, ValidationError, fields, post_load


class FactoredIntegerField(fields.Field):
    """``{"value": 24, "factors": {"2": 3, "3": 1}}``."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return {'value': value.value, 'factors': {str(p): e for p, e in value}}

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            factored = FactoredInteger.from_exponents({int(p): int(e) for p, e in value['factors'].items()})
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError('invalid factored integer: %s' % e) from e
        if 'value' in value and factored.value != value['value']:
            raise ValidationError('factors do not multiply to %s' % value['value'])
        return factored


class GroupField(fields.Field):
    """``"SU(4)"``."""

    def _serialize(self, value, attr, obj, **kwargs):
        return None if value is None else str(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            family, size = value.rstrip(')').split('(')
            return GroupDescriptor(GroupFamily(family), int(size))
        except ValueError as e:
            raise ValidationError('invalid group %r' % value) from e


class WeightField(fields.Field):
    """``{"algebra": "B3", "coeffs": [0, 1, 0]}``."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return {'algebra': str(value.algebra), 'coeffs': list(value.coeffs)}

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            algebra = AlgebraType(value['algebra'][0], int(value['algebra'][1:]))
            return DominantWeight(algebra, tuple(value['coeffs']))
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError('invalid weight: %s' % e) from e


class SummandSchema(Schema):
    label = fields.String(required=True)
    dim = fields.Integer(required=True)
    multiplicity = fields.Integer(required=True)

    @post_load
    def make_summand(self, data, **kwargs):
        return Summand(**data)


class HomDescriptorSchema(Schema):
    kind = fields.Enum(HomKind, required=True)
    summands = fields.List(fields.Nested(SummandSchema), required=True)

    @post_load
    def make_hom(self, data, **kwargs):
        return HomDescriptor(data['kind'], tuple(data['summands']))


class DivisibilityTraceSchema(Schema):
    m = fields.Integer(required=True)
    d = fields.Integer(required=True)
    modulus = FactoredIntegerField(required=True)
    remainder = fields.Integer(required=True)

    @post_load
    def make_trace(self, data, **kwargs):
        return DivisibilityTrace(**data)


class ReductionVerdictSchema(Schema):
    target = GroupField(attribute='query.target', required=True)
    source = GroupField(attribute='query.source', required=True)
    reducible = fields.Boolean(required=True)
    reason = fields.Enum(Reason, by_value=True, required=True)
    case = fields.String(allow_none=True)
    m = fields.Integer(allow_none=True)
    d = fields.Integer(allow_none=True)
    modulus = FactoredIntegerField(allow_none=True)
    homs = fields.List(fields.Nested(HomDescriptorSchema))
    trace = fields.Nested(DivisibilityTraceSchema, allow_none=True)

    @post_load
    def make_verdict(self, data, **kwargs):
        # m, d and modulus repeat the trace
        query = ReductionQuery(data['query']['target'], data['query']['source'])
        return ReductionVerdict(query, data['reducible'], data['reason'], data.get('case'),
                                data.get('homs', []), data.get('trace'))


class RealIrrepInfoSchema(Schema):
    weight = WeightField()
    reality = fields.Enum(RealityType, by_value=True)
    real_dim = fields.Integer()
    real_dim_is_lower_bound = fields.Boolean()


class KOGroupInfoSchema(Schema):
    n = fields.Integer()
    k = fields.Integer()
    status = fields.Enum(KOStatus, by_value=True)
    branch = fields.Integer()
    order = fields.Integer(allow_none=True)
    psi3_exponent = fields.Integer(allow_none=True)


class NonstandardReportSchema(Schema):
    group = GroupField()
    bound = fields.Integer()
    achieving_weight = WeightField()
    minimum = fields.Integer()
    witnesses = fields.List(fields.Nested(RealIrrepInfoSchema))
    below_bound = fields.List(fields.Nested(RealIrrepInfoSchema))


class NonexteriorReportSchema(Schema):
    group = GroupField()
    stated_bound = fields.Integer()
    derived_bound = fields.Integer()
    minimum = fields.Integer()
    reading = fields.String()
    witnesses = fields.List(WeightField())


class AtlasRowSchema(Schema):
    n = fields.Integer()
    target = GroupField()
    source = fields.Enum(GroupFamily, by_value=True)
    sphere_dimension = fields.Integer()
    case = fields.String(allow_none=True)
    min_k = fields.Integer(allow_none=True)
    gap = fields.Integer(allow_none=True)
    reason = fields.String()


ATLAS_COLUMNS = ('n', 'target', 'source', 'sphere_dimension', 'case', 'min_k', 'gap', 'reason')


class BatteryReportSchema(Schema):
    name = fields.String()
    checks = fields.Integer()
    items = fields.List(fields.Dict())
