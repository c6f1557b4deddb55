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
"""
Rule extraction from treebanks.

Both extractors first count per sentence shard, merge the counters, then
decide rules from the merged counts. Counters hold ints and Fractions, so the
merge is exact and independent of shard order.
"""
from collections import Counter, defaultdict
from fractions import Fraction

from morphoscore.common.enums import Side
from morphoscore.common.log import logger
from morphoscore.common.sharding import map_shards
from morphoscore.rules.divergence import kl_divergence
from morphoscore.rules.model import AgreementRule, AssignmentRule, Distribution, RuleSet, \
    ExtractionConfig, exact
from morphoscore.treebank.model import edges
from morphoscore.utils.tools import round_float


def _value_weights(values):
    share = Fraction(1, len(values))
    return {value: share for value in values}


class AgreementExtractor:
    """
    Mine agreement rules.

    For each (dep_pos, head_pos, deprel, feature) the agreement fraction is
    computed over edges where both ends carry the feature. Patterns whose
    fraction is strictly above the threshold become candidates; the
    candidates with the largest support are kept until they cover the
    configured share of all candidate support.

    Args:
        config (ExtractionConfig): Thresholds.
        jobs (int): Worker threads for counting. Default: 1.
    """

    def __init__(self, config, jobs=1):
        self._config = config
        self._jobs = jobs
        self.stats = {}

    def _count(self, offset, sentences):
        totals = Counter()
        agreeing = Counter()
        for sentence in sentences:
            for dependent, head, deprel in edges(sentence, self._config.coarse_deprel):
                for feature in dependent.feats:
                    if feature not in head.feats:
                        continue
                    key = (dependent.upos, head.upos, deprel, feature)
                    totals[key] += 1
                    if dependent.feature_values(feature) & head.feature_values(feature):
                        agreeing[key] += 1
        return totals, agreeing

    def count(self, treebank):
        """
        Count edges per pattern.

        Returns:
            tuple[Counter, Counter], edges where both ends carry the feature,
            and those of them whose value sets intersect.
        """
        totals = Counter()
        agreeing = Counter()
        for shard_totals, shard_agreeing in map_shards(self._count, treebank.sentences, self._jobs):
            totals.update(shard_totals)
            agreeing.update(shard_agreeing)
        return totals, agreeing

    def extract(self, treebank):
        """
        Extract agreement rules.

        Args:
            treebank (Treebank): Parsed treebank.

        Returns:
            list[AgreementRule], kept rules sorted by key.
        """
        totals, agreeing = self.count(treebank)
        threshold = exact(self._config.agree_threshold)

        candidates = []
        for key in sorted(totals):
            fraction = Fraction(agreeing[key], totals[key])
            if fraction > threshold:
                candidates.append(AgreementRule(*key, support=totals[key],
                                                agree_fraction=round_float(fraction)))

        candidates.sort(key=lambda rule: (-rule.support, rule.key))
        candidate_support = sum(rule.support for rule in candidates)
        target = exact(self._config.agree_coverage) * candidate_support
        kept = []
        covered = 0
        for rule in candidates:
            if covered >= target:
                break
            kept.append(rule)
            covered += rule.support

        self.stats = {
            'patterns': len(totals),
            'candidates': len(candidates),
            'kept': len(kept),
            'candidate_support': candidate_support,
            'kept_support': covered,
        }
        logger.info('Agreement extraction: %d patterns, %d candidates, %d kept.',
                    len(totals), len(candidates), len(kept))
        return sorted(kept, key=lambda rule: rule.key)


class AssignmentExtractor:
    """
    Mine case-assignment and verb-form rules.

    The global distribution G of a feature is taken over every token of a
    POS; the local distribution L over tokens of that POS at one end of one
    (target_pos, other_pos, deprel) edge pattern. A rule is emitted when
    KL(L || G) is above the threshold and the pattern has enough instances;
    its allowed values are those with enough local mass.

    Args:
        config (ExtractionConfig): Thresholds.
        jobs (int): Worker threads for counting. Default: 1.
    """

    def __init__(self, config, jobs=1):
        self._config = config
        self._jobs = jobs
        self.stats = {}

    def _count(self, offset, sentences):
        global_counts = defaultdict(Counter)
        local_counts = defaultdict(Counter)
        support = Counter()
        for sentence in sentences:
            for token in sentence.tokens:
                for feature, values in token.feats.items():
                    global_counts[(token.upos, feature)].update(_value_weights(values))
            for dependent, head, deprel in edges(sentence, self._config.coarse_deprel):
                sides = ((dependent, head, Side.DEPENDENT.value), (head, dependent, Side.HEAD.value))
                for target, other, side in sides:
                    for feature, values in target.feats.items():
                        key = (target.upos, other.upos, deprel, side, feature)
                        local_counts[key].update(_value_weights(values))
                        support[key] += 1
        return global_counts, local_counts, support

    def count(self, treebank):
        """
        Count feature values globally and per edge pattern.

        Returns:
            tuple, (global counts by (upos, feature), local counts by rule key,
            instance count by rule key).
        """
        global_counts = defaultdict(Counter)
        local_counts = defaultdict(Counter)
        support = Counter()
        for shard in map_shards(self._count, treebank.sentences, self._jobs):
            for key, counts in shard[0].items():
                global_counts[key].update(counts)
            for key, counts in shard[1].items():
                local_counts[key].update(counts)
            support.update(shard[2])
        return global_counts, local_counts, support

    def extract(self, treebank):
        """
        Extract assignment rules.

        Args:
            treebank (Treebank): Parsed treebank.

        Returns:
            list[AssignmentRule], emitted rules sorted by key.
        """
        cfg = self._config
        global_counts, local_counts, support = self.count(treebank)
        inclusion = exact(cfg.value_inclusion_threshold)

        rules = []
        frequent = 0
        for key in sorted(local_counts):
            target_pos, other_pos, deprel, side, feature = key
            if support[key] < cfg.min_relation_count:
                continue
            frequent += 1
            local = Distribution.from_counts(local_counts[key])
            global_ = Distribution.from_counts(global_counts[(target_pos, feature)])
            divergence = kl_divergence(local, global_, cfg.kl_epsilon)
            if not divergence > cfg.kl_threshold:
                continue
            ranked = sorted(local.mass.items(), key=lambda item: (-item[1], item[0]))
            allowed = tuple(value for value, mass in ranked if mass >= inclusion)
            if not allowed:
                logger.warning('No value of %s clears the inclusion threshold for %s.', feature, key)
                continue
            rules.append(AssignmentRule(target_pos, other_pos, deprel, side, feature,
                                        allowed, round_float(divergence), support[key]))

        self.stats = {
            'patterns': len(local_counts),
            'frequent_patterns': frequent,
            'emitted': len(rules),
        }
        logger.info('Assignment extraction: %d patterns, %d frequent, %d emitted.',
                    len(local_counts), frequent, len(rules))
        return rules


def extract_agreement_rules(treebank, config, jobs=1):
    """
    Extract agreement rules.

    Args:
        treebank (Treebank): Parsed treebank.
        config (ExtractionConfig): Thresholds.
        jobs (int): Worker threads for counting. Default: 1.

    Returns:
        list[AgreementRule], rules sorted by key; empty for an empty treebank.
    """
    return AgreementExtractor(config, jobs).extract(treebank)


def extract_assignment_rules(treebank, config, jobs=1):
    """
    Extract assignment rules.

    Args:
        treebank (Treebank): Parsed treebank.
        config (ExtractionConfig): Thresholds.
        jobs (int): Worker threads for counting. Default: 1.

    Returns:
        list[AssignmentRule], rules sorted by key.
    """
    return AssignmentExtractor(config, jobs).extract(treebank)


def extract_rules(treebank, config=None, language='', schema='', jobs=1):
    """
    Extract a full rule set and its statistics.

    Args:
        treebank (Treebank): Parsed treebank.
        config (ExtractionConfig): Thresholds. Default: ExtractionConfig.create().
        language (str): Language label stored in the rule set.
        schema (str): Annotation schema label stored in the rule set.
        jobs (int): Worker threads for counting. Default: 1.

    Returns:
        tuple[RuleSet, dict], the rule set and a summary dict.
    """
    if config is None:
        config = ExtractionConfig.create()
    agreement_extractor = AgreementExtractor(config, jobs)
    assignment_extractor = AssignmentExtractor(config, jobs)
    rule_set = RuleSet(language, schema,
                       agreement_extractor.extract(treebank),
                       assignment_extractor.extract(treebank),
                       config)
    summary = extraction_summary(rule_set, agreement_extractor.stats, assignment_extractor.stats)
    return rule_set, summary


def extraction_summary(rule_set, agreement_stats=None, assignment_stats=None):
    """
    Summarize a rule set.

    Args:
        rule_set (RuleSet): Rules to summarize.
        agreement_stats (dict): Statistics of an AgreementExtractor run.
        assignment_stats (dict): Statistics of an AssignmentExtractor run.

    Returns:
        dict, counts by kind and by feature, plus coverage statistics.
    """
    by_feature = defaultdict(lambda: {'agreement': 0, 'assignment': 0})
    for rule in rule_set.agreement:
        by_feature[rule.feature]['agreement'] += 1
    for rule in rule_set.assignment:
        by_feature[rule.feature]['assignment'] += 1

    summary = {
        'agreement_rules': len(rule_set.agreement),
        'assignment_rules': len(rule_set.assignment),
        'by_feature': dict(sorted(by_feature.items())),
    }
    if agreement_stats:
        candidate_support = agreement_stats['candidate_support']
        summary['agreement_candidates'] = agreement_stats['candidates']
        summary['agreement_coverage'] = (
            agreement_stats['kept_support'] / candidate_support if candidate_support else None)
    if assignment_stats:
        summary['assignment_patterns'] = assignment_stats['patterns']
        summary['assignment_frequent_patterns'] = assignment_stats['frequent_patterns']
    return summary
