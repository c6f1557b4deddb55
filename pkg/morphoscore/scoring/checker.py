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
"""Rule checking on dependency edges."""
from collections import namedtuple, defaultdict

from morphoscore.common.enums import Side
from morphoscore.treebank.model import edges

RuleInstance = namedtuple('RuleInstance', ['rule_key', 'sent_id', 'dependent_id', 'head_id',
                                           'satisfied'])


def check_agreement(rule, edge):
    """
    Check an agreement rule on an edge where both ends carry the feature.

    Args:
        rule (AgreementRule): Rule whose pattern matches the edge.
        edge (EdgeInstance): The edge.

    Returns:
        bool, True if the two value sets intersect.
    """
    return bool(edge.dependent.feature_values(rule.feature) & edge.head.feature_values(rule.feature))


def _constrained(rule, edge):
    return edge.dependent if rule.side == Side.DEPENDENT.value else edge.head


def check_assignment(rule, edge):
    """
    Check an assignment rule on an edge whose constrained end carries the feature.

    Args:
        rule (AssignmentRule): Rule whose pattern matches the edge.
        edge (EdgeInstance): The edge.

    Returns:
        bool, True if the constrained token has an allowed value.
    """
    return bool(_constrained(rule, edge).feature_values(rule.feature) & set(rule.allowed_values))


class RuleIndex:
    """
    Rules of a RuleSet indexed by (dep_pos, head_pos, deprel).

    Args:
        rule_set (RuleSet): Rules to index.
    """

    def __init__(self, rule_set):
        self.rule_set = rule_set
        self.coarse = rule_set.config.coarse_deprel
        self._agreement = defaultdict(list)
        self._assignment = defaultdict(list)
        for rule in rule_set.agreement:
            self._agreement[(rule.dep_pos, rule.head_pos, rule.deprel)].append(rule)
        for rule in rule_set.assignment:
            self._assignment[(rule.dep_pos, rule.head_pos, rule.deprel)].append(rule)

    def instances(self, sentence, sent_id):
        """
        List rule instances of a sentence.

        Args:
            sentence (Sentence): The sentence.
            sent_id (str): Identifier stored on each instance.

        Returns:
            list[RuleInstance], instances in edge order.
        """
        result = []
        for edge in edges(sentence, self.coarse):
            dependent, head = edge.dependent, edge.head
            pattern = (dependent.upos, head.upos, edge.deprel)
            for rule in self._agreement.get(pattern, ()):
                if rule.feature in dependent.feats and rule.feature in head.feats:
                    result.append(RuleInstance(rule.label, sent_id, dependent.id, head.id,
                                               check_agreement(rule, edge)))
            for rule in self._assignment.get(pattern, ()):
                if rule.feature in _constrained(rule, edge).feats:
                    result.append(RuleInstance(rule.label, sent_id, dependent.id, head.id,
                                               check_assignment(rule, edge)))
        return result


def applicable_instances(sentence, rule_set, index=0):
    """
    List every (rule, edge) pair where the rule applies, with its verdict.

    A rule applies to an edge when the POS pair and relation match and the
    feature is present: on both ends for agreement, on the constrained end
    for assignment. Missing features never produce a violation.

    Args:
        sentence (Sentence): The sentence.
        rule_set (RuleSet): Active rules.
        index (int): Position of the sentence, used when it has no sent_id. Default: 0.

    Returns:
        list[RuleInstance], applicable instances.
    """
    return RuleIndex(rule_set).instances(sentence, sentence.position_id(index))
