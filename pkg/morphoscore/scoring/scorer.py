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
"""Segment and corpus scores."""
from collections import namedtuple, Counter
from fractions import Fraction

from morphoscore.common.enums import RuleKind
from morphoscore.common.log import logger
from morphoscore.common.sharding import map_shards
from morphoscore.scoring.checker import RuleIndex
from morphoscore.treebank.model import coarse_deprel


class RuleCount(namedtuple('RuleCount', ['applicable', 'satisfied'])):
    """Applicable and satisfied instance counts of one rule."""

    __slots__ = ()

    @property
    def ratio(self):
        if not self.applicable:
            return None
        return Fraction(self.satisfied, self.applicable)


SegmentScore = namedtuple('SegmentScore', ['sent_id', 'per_rule', 'score'])

CorpusReport = namedtuple('CorpusReport', ['per_rule', 'corpus_score', 'kind_scores',
                                           'segment_scores', 'warnings'])


def _count_instances(instances):
    applicable = Counter()
    satisfied = Counter()
    for instance in instances:
        applicable[instance.rule_key] += 1
        if instance.satisfied:
            satisfied[instance.rule_key] += 1
    return {key: RuleCount(applicable[key], satisfied[key]) for key in sorted(applicable)}


def _macro_average(counts):
    ratios = [count.ratio for count in counts if count.applicable]
    if not ratios:
        return None
    return float(sum(ratios) / len(ratios))


def score_indexed(index, sentence, rule_index):
    """Score the sentence at `index` with a prepared RuleIndex."""
    sent_id = sentence.position_id(index)
    per_rule = _count_instances(rule_index.instances(sentence, sent_id))
    return SegmentScore(sent_id, per_rule, _macro_average(per_rule.values()))


def score_segment(sentence, rule_set, index=0):
    """
    Score one sentence.

    The score is the unweighted mean over applicable rules of each rule's
    satisfied/applicable ratio within the sentence.

    Args:
        sentence (Sentence): The sentence.
        rule_set (RuleSet): Active rules.
        index (int): Position of the sentence, used when it has no sent_id. Default: 0.

    Returns:
        SegmentScore, per-rule counts and the score, None when no rule applies.
    """
    return score_indexed(index, sentence, RuleIndex(rule_set))


def schema_warnings(treebank, rule_set):
    """
    Warn about rule relations that never occur in the input.

    Returns:
        list[str], warning messages.
    """
    rule_deprels = rule_set.deprels()
    if not rule_deprels:
        return []
    coarse = rule_set.config.coarse_deprel
    seen = set()
    for sentence in treebank.sentences:
        for token in sentence.tokens:
            seen.add(coarse_deprel(token.deprel) if coarse else token.deprel)
    missing = sorted(rule_deprels - seen)
    if not missing:
        return []
    if len(missing) == len(rule_deprels):
        message = 'None of the rule relations occur in the input; check the annotation schema.'
    else:
        message = '{} of {} rule relations do not occur in the input: {}'.format(
            len(missing), len(rule_deprels), ', '.join(missing))
    return [message]


def score_corpus(treebank, rule_set, segments=False, jobs=1):
    """
    Score a corpus.

    Rule counts are pooled over all sentences and the corpus score is the
    macro-average over rules with at least one application of pooled
    satisfied/applicable. This is not the mean of segment scores.

    Args:
        treebank (Treebank): Sentences to score.
        rule_set (RuleSet): Active rules.
        segments (bool): Whether to keep per-sentence scores. Default: False.
        jobs (int): Worker threads. Default: 1.

    Returns:
        CorpusReport, per-rule counts for every rule, corpus and per-kind
        scores (None when undefined), optional segment scores and warnings.
    """
    rule_index = RuleIndex(rule_set)

    def score_shard(offset, sentences):
        return [score_indexed(offset + i, sentence, rule_index) for i, sentence in enumerate(sentences)]

    segment_scores = []
    for shard in map_shards(score_shard, treebank.sentences, jobs):
        segment_scores.extend(shard)

    applicable = Counter()
    satisfied = Counter()
    for segment in segment_scores:
        for key, count in segment.per_rule.items():
            applicable[key] += count.applicable
            satisfied[key] += count.satisfied

    per_rule = {rule.label: RuleCount(applicable[rule.label], satisfied[rule.label])
                for rule in rule_set.rules()}
    per_rule = dict(sorted(per_rule.items()))
    corpus_score = _macro_average(per_rule.values())
    kind_scores = {
        RuleKind.AGREEMENT.value: _macro_average(per_rule[rule.label] for rule in rule_set.agreement),
        RuleKind.ASSIGNMENT.value: _macro_average(per_rule[rule.label] for rule in rule_set.assignment),
    }

    warnings = schema_warnings(treebank, rule_set)
    if corpus_score is None:
        warnings.append('No rule applies to the input; corpus score is undefined.')
    for warning in warnings:
        logger.warning(warning)
    logger.info('Scored %d sentences with %d rules.', len(segment_scores), len(per_rule))

    return CorpusReport(per_rule, corpus_score, kind_scores,
                        segment_scores if segments else None, warnings)


def mean_segment_score(segment_scores):
    """Mean of defined segment scores, None if there is none."""
    defined = [segment.score for segment in segment_scores if segment.score is not None]
    if not defined:
        return None
    return sum(defined) / len(defined)
