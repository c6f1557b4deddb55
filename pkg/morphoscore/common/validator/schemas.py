# Copyright 2021 MorphoScore Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ============================================================================
"""Define schemas of extraction parameters and rule files."""
from marshmallow import Schema, fields, ValidationError, validates
from marshmallow.validate import Range, OneOf, Length

from morphoscore.common.enums import Side


class ExtractionConfigSchema(Schema):
    """Define the parameter schema for rule extraction."""
    agree_threshold = fields.Float(required=True, validate=Range(min=0, max=1, min_inclusive=False))
    agree_coverage = fields.Float(required=True, validate=Range(min=0, max=1, min_inclusive=False))
    kl_threshold = fields.Float(required=True, validate=Range(min=0))
    min_relation_count = fields.Int(required=True, strict=True, validate=Range(min=1))
    value_inclusion_threshold = fields.Float(
        required=True, validate=Range(min=0, max=1, min_inclusive=False))
    kl_epsilon = fields.Float(required=True, validate=Range(min=0, min_inclusive=False))
    coarse_deprel = fields.Bool(required=True)

    @validates('min_relation_count')
    def check_min_relation_count(self, value, **kwargs):
        """Check min_relation_count is not a bool."""
        if isinstance(value, bool):
            raise ValidationError('Must be an integer.')


class AgreementRuleSchema(Schema):
    """Define the schema of one agreement rule entry."""
    dep_pos = fields.Str(required=True, validate=Length(min=1))
    head_pos = fields.Str(required=True, validate=Length(min=1))
    deprel = fields.Str(required=True, validate=Length(min=1))
    feature = fields.Str(required=True, validate=Length(min=1))
    support = fields.Int(required=True, strict=True, validate=Range(min=0))
    agree_fraction = fields.Float(required=True, validate=Range(min=0, max=1))


class AssignmentRuleSchema(Schema):
    """Define the schema of one assignment rule entry."""
    target_pos = fields.Str(required=True, validate=Length(min=1))
    other_pos = fields.Str(required=True, validate=Length(min=1))
    deprel = fields.Str(required=True, validate=Length(min=1))
    side = fields.Str(required=True, validate=OneOf(Side.list_members()))
    feature = fields.Str(required=True, validate=Length(min=1))
    allowed_values = fields.List(fields.Str(validate=Length(min=1)), required=True,
                                 validate=Length(min=1))
    kl = fields.Float(required=True, validate=Range(min=0))
    support = fields.Int(required=True, strict=True, validate=Range(min=0))

    @validates('allowed_values')
    def check_allowed_values(self, value, **kwargs):
        """Check allowed values are distinct."""
        if len(set(value)) != len(value):
            raise ValidationError('Values must be distinct.')


class RuleFileSchema(Schema):
    """Define the schema of a whole rule file."""
    version = fields.Int(required=True, strict=True)
    language = fields.Str(required=True)
    schema = fields.Str(required=True)
    config = fields.Nested(ExtractionConfigSchema, required=True)
    agreement = fields.List(fields.Nested(AgreementRuleSchema), required=True)
    assignment = fields.List(fields.Nested(AssignmentRuleSchema), required=True)
