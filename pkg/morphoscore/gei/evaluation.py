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
"""Grammar-error identification from rule violations."""
from collections import namedtuple, defaultdict
from fractions import Fraction

from morphoscore.common.log import logger
from morphoscore.common.sharding import map_shards
from morphoscore.scoring.checker import RuleIndex
from morphoscore.utils.tools import to_json_number

HALF = Fraction(1, 2)


class PRReport(namedtuple('PRReport', ['tp', 'fp', 'fn'])):
    """Token-level counts; precision and recall are None when undefined."""

    __slots__ = ()

    @property
    def precision(self):
        if not self.tp + self.fp:
            return None
        return float(Fraction(self.tp) / (self.tp + self.fp))

    @property
    def recall(self):
        if not self.tp + self.fn:
            return None
        return float(Fraction(self.tp) / (self.tp + self.fn))

    def to_dict(self):
        return {
            'tp': self.tp,
            'fp': float(self.fp),
            'fn': self.fn,
            'precision': to_json_number(self.precision),
            'recall': to_json_number(self.recall),
        }


def _violation_map(instances):
    neighbors = defaultdict(set)
    for instance in instances:
        if not instance.satisfied:
            neighbors[instance.dependent_id].add(instance.head_id)
            neighbors[instance.head_id].add(instance.dependent_id)
    return neighbors


def violating_neighbors(token, sentence, rule_set, index=0):
    """
    Head and dependents of a token linked to it by a violated rule instance.

    Args:
        token (Token): Token of `sentence`.
        sentence (Sentence): The sentence.
        rule_set (RuleSet): Active rules.
        index (int): Position of the sentence. Default: 0.

    Returns:
        set[int], ids of the violating neighbors; the token is hypothesized
        erroneous when the set is not empty.
    """
    instances = RuleIndex(rule_set).instances(sentence, sentence.position_id(index))
    return set(_violation_map(instances).get(token.id, ()))


def _tally(index, sentence, gold, rule_index):
    sent_id = sentence.position_id(index)
    neighbors = _violation_map(rule_index.instances(sentence, sent_id))
    tp = fn = 0
    fp = Fraction(0)
    for token in sentence.tokens:
        hypothesis = bool(neighbors.get(token.id))
        marked = (sent_id, token.id) in gold
        if hypothesis and marked:
            tp += 1
        elif hypothesis:
            for neighbor in neighbors[token.id]:
                if (sent_id, neighbor) not in gold:
                    fp += HALF
        elif marked:
            fn += 1
    return tp, fp, fn


def evaluate_gei(treebank, gold, rule_set, jobs=1):
    """
    Precision and recall of rule-violation error hypotheses against gold marks.

    A token is hypothesized erroneous when some rule instance on a link to its
    head or a dependent is violated. A hypothesized token that is gold counts
    as a true positive; otherwise each of its violating neighbors that is not
    gold adds half a false positive. A gold token without hypothesis is a
    false negative.

    Args:
        treebank (Treebank): Sentences to check.
        gold (GoldErrors): Gold marks.
        rule_set (RuleSet): Active rules.
        jobs (int): Worker threads. Default: 1.

    Returns:
        PRReport, counts with derived precision and recall.
    """
    rule_index = RuleIndex(rule_set)

    def tally_shard(offset, sentences):
        return [_tally(offset + i, sentence, gold, rule_index) for i, sentence in enumerate(sentences)]

    tp = fn = 0
    fp = Fraction(0)
    for shard in map_shards(tally_shard, treebank.sentences, jobs):
        for sentence_tp, sentence_fp, sentence_fn in shard:
            tp += sentence_tp
            fp += sentence_fp
            fn += sentence_fn

    report = PRReport(tp, fp, fn)
    logger.info('GEI evaluation: tp=%d fp=%s fn=%d.', tp, float(fp), fn)
    return report
