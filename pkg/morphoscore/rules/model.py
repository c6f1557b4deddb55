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
"""Rule data model."""
from collections import namedtuple
from fractions import Fraction

from morphoscore.common.enums import RuleKind, RuleKindFilter, Side
from morphoscore.common.exceptions.exceptions import RuleParamError
from morphoscore.common.validator.validate import validate_extraction_config
from morphoscore.conf import settings

_EXTRACTION_FIELDS = ['agree_threshold', 'agree_coverage', 'kl_threshold', 'min_relation_count',
                      'value_inclusion_threshold', 'kl_epsilon', 'coarse_deprel']


def exact(value):
    """Exact rational for a decimal threshold, so 0.7 compares as 7/10."""
    if isinstance(value, Fraction):
        return value
    return Fraction(repr(float(value)))


class ExtractionConfig(namedtuple('ExtractionConfig', _EXTRACTION_FIELDS)):
    """
    Rule extraction thresholds.

    Use `ExtractionConfig.create` to fill defaults from settings and validate.
    """

    __slots__ = ()

    @classmethod
    def create(cls, **kwargs):
        """
        Build a validated config.

        Args:
            kwargs: Any of the config fields; omitted or None fields take their
                value from settings.

        Returns:
            ExtractionConfig, validated config.

        Raises:
            RuleParamError: If a value is unknown or out of range.

        Examples:
            >>> cfg = ExtractionConfig.create(min_relation_count=5)
        """
        defaults = {
            'agree_threshold': settings.AGREE_THRESHOLD,
            'agree_coverage': settings.AGREE_COVERAGE,
            'kl_threshold': settings.KL_THRESHOLD,
            'min_relation_count': settings.MIN_RELATION_COUNT,
            'value_inclusion_threshold': settings.VALUE_INCLUSION_THRESHOLD,
            'kl_epsilon': settings.KL_EPSILON,
            'coarse_deprel': False,
        }
        for key, value in kwargs.items():
            if value is not None:
                defaults[key] = value
        return cls(**validate_extraction_config(defaults))

    def to_dict(self):
        return dict(self._asdict())


class AgreementRule(namedtuple('AgreementRule', ['dep_pos', 'head_pos', 'deprel', 'feature',
                                                 'support', 'agree_fraction'])):
    """Dependent and head on one pattern share a value of `feature`."""

    __slots__ = ()
    kind = RuleKind.AGREEMENT

    @property
    def key(self):
        return self.dep_pos, self.head_pos, self.deprel, self.feature

    @property
    def label(self):
        return 'agr-{}-{}-{}:{}'.format(self.deprel, self.dep_pos, self.head_pos, self.feature)


class AssignmentRule(namedtuple('AssignmentRule', ['target_pos', 'other_pos', 'deprel', 'side',
                                                   'feature', 'allowed_values', 'kl', 'support'])):
    """The constrained end of one pattern takes `feature` from `allowed_values`."""

    __slots__ = ()
    kind = RuleKind.ASSIGNMENT

    @property
    def key(self):
        return self.target_pos, self.other_pos, self.deprel, self.side, self.feature

    @property
    def dep_pos(self):
        return self.target_pos if self.side == Side.DEPENDENT.value else self.other_pos

    @property
    def head_pos(self):
        return self.other_pos if self.side == Side.DEPENDENT.value else self.target_pos

    @property
    def label(self):
        side = 'depd' if self.side == Side.DEPENDENT.value else 'head'
        return 'args-{}-{}-{}:{}:{}'.format(self.deprel, self.dep_pos, self.head_pos, side, self.feature)


class Distribution:
    """
    Empirical distribution over feature values.

    Masses are exact fractions; weights need not be integers since a token
    with k values contributes 1/k to each.
    """

    __slots__ = ('mass',)

    def __init__(self, mass):
        self.mass = dict(mass)

    @classmethod
    def from_counts(cls, counts):
        """
        Normalize value weights.

        Args:
            counts (Mapping): Value to non-negative weight.

        Returns:
            Distribution, normalized distribution; empty for zero total weight.
        """
        total = sum(counts.values())
        if not total:
            return cls({})
        return cls({value: Fraction(weight) / Fraction(total) for value, weight in counts.items()
                    if weight})

    def get(self, value):
        return self.mass.get(value, 0)

    def support(self):
        return set(self.mass)

    def __eq__(self, other):
        if isinstance(other, Distribution):
            return self.mass == other.mass
        return NotImplemented

    def __repr__(self):
        return 'Distribution({})'.format({key: float(value) for key, value in sorted(self.mass.items())})


class RuleSet:
    """
    An immutable set of agreement and assignment rules.

    Raises:
        RuleParamError: If two rules of one kind share a key.
    """

    def __init__(self, language='', schema='', agreement=(), assignment=(), config=None):
        self.language = language
        self.schema = schema
        self.agreement = tuple(agreement)
        self.assignment = tuple(assignment)
        self.config = config if config is not None else ExtractionConfig.create()
        duplicate = find_duplicate_label(self.agreement) or find_duplicate_label(self.assignment)
        if duplicate:
            raise RuleParamError('duplicate rule key {}'.format(duplicate))

    def rules(self):
        """All rules, agreement first."""
        return self.agreement + self.assignment

    def by_label(self):
        return {rule.label: rule for rule in self.rules()}

    def restrict(self, kind):
        """
        Keep one kind of rules.

        Args:
            kind (str): One of RuleKindFilter values.

        Returns:
            RuleSet, restricted copy.
        """
        if kind not in RuleKindFilter.list_members():
            raise RuleParamError('rule kind should be one of {}'.format(RuleKindFilter.list_members()))
        agreement = self.agreement if kind != RuleKindFilter.ASSIGNMENT.value else ()
        assignment = self.assignment if kind != RuleKindFilter.AGREEMENT.value else ()
        return RuleSet(self.language, self.schema, agreement, assignment, self.config)

    def deprels(self):
        return {rule.deprel for rule in self.rules()}

    def __len__(self):
        return len(self.agreement) + len(self.assignment)

    def __eq__(self, other):
        if not isinstance(other, RuleSet):
            return NotImplemented
        return (self.language, self.schema, self.agreement, self.assignment, self.config) == \
            (other.language, other.schema, other.agreement, other.assignment, other.config)

    def __repr__(self):
        return 'RuleSet(language={!r}, agreement={}, assignment={})'.format(
            self.language, len(self.agreement), len(self.assignment))


def find_duplicate_label(rules):
    """First label shared by two rules, or None."""
    seen = set()
    for rule in rules:
        if rule.key in seen:
            return rule.label
        seen.add(rule.key)
    return None
