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
Function:
    Test agreement and assignment rule extraction.
Usage:
    pytest tests/ut/rules
"""
import pytest

from morphoscore.rules.extraction import extract_rules, extract_agreement_rules, \
    extract_assignment_rules, AssignmentExtractor
from morphoscore.rules.model import ExtractionConfig, Distribution
from morphoscore.rules.rulefile import dumps_rules
from morphoscore.treebank.conllu import parse_treebank

from ...utils.builders import row, block, treebank, edge_sentence
from ...utils.oracle import read_sentences, oracle_agreement, oracle_assignment
from ...utils.synthetic import synthetic_treebank_text

# Case counts of object nouns and of all other nouns; together the nouns
# follow 30.4% Nom, 11.5% Gen, 24.8% Acc, 33.3% Dat.
OBJECT_CASES = {'Nom': 113, 'Gen': 4, 'Acc': 867, 'Dat': 16}
OTHER_CASES = {'Nom': 1103, 'Gen': 456, 'Acc': 125, 'Dat': 1316}
NOUNS_PER_SENTENCE = 100


def object_case_treebank():
    nouns = []
    for deprel, counts in (('comp:obj', OBJECT_CASES), ('mod', OTHER_CASES)):
        for case, count in sorted(counts.items()):
            nouns.extend([(deprel, case)] * count)
    blocks = []
    for start in range(0, len(nouns), NOUNS_PER_SENTENCE):
        chunk = nouns[start:start + NOUNS_PER_SENTENCE]
        rows = [row(1, 'liest', 'VERB', '_', 0, 'root', lemma='lesen')]
        for offset, (deprel, case) in enumerate(chunk, start=2):
            rows.append(row(offset, 'Buch', 'NOUN', 'Case={}'.format(case), 1, deprel))
        blocks.append(block(rows, sent_id='obj-{}'.format(start // NOUNS_PER_SENTENCE)))
    return treebank(*blocks)


class TestAgreementExtraction:
    """Test extract_agreement_rules."""

    def test_threshold_is_strict(self):
        """A pattern agreeing in exactly 90% of its edges is not a rule at threshold 0.9."""
        blocks = [edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Sing', 'mod') for _ in range(9)]
        blocks.append(edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Plur', 'mod'))
        config = ExtractionConfig.create(agree_coverage=1.0)
        assert extract_agreement_rules(treebank(*blocks), config) == []
        rules = extract_agreement_rules(treebank(*blocks), ExtractionConfig.create(agree_threshold=0.89,
                                                                                   agree_coverage=1.0))
        assert [(rule.key, rule.support) for rule in rules] == [(('ADJ', 'NOUN', 'mod', 'Number'), 10)]
        assert rules[0].agree_fraction == pytest.approx(0.9)

    def test_one_sided_feature_ignored(self):
        """Edges where only one end carries the feature do not count."""
        blocks = [edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Sing', 'mod') for _ in range(3)]
        blocks.extend(edge_sentence('ADJ', 'Number=Sing', 'NOUN', '_', 'mod') for _ in range(5))
        rules = extract_agreement_rules(treebank(*blocks), ExtractionConfig.create(agree_coverage=1.0))
        assert [rule.support for rule in rules] == [3]
        assert rules[0].agree_fraction == 1.0

    def test_multi_valued_intersection(self):
        """Value sets that intersect agree."""
        blocks = [edge_sentence('DET', 'Case=Acc,Nom', 'NOUN', 'Case=Nom', 'det') for _ in range(4)]
        rules = extract_agreement_rules(treebank(*blocks), ExtractionConfig.create(agree_coverage=1.0))
        assert rules[0].agree_fraction == 1.0

    def test_coverage_pruning(self):
        """Only the most frequent candidates covering the coverage share are kept."""
        blocks = [edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Sing', 'mod') for _ in range(8)]
        blocks.extend(edge_sentence('DET', 'Number=Sing', 'NOUN', 'Number=Sing', 'det') for _ in range(2))
        tb = treebank(*blocks)
        kept = extract_agreement_rules(tb, ExtractionConfig.create(agree_coverage=0.8))
        assert [rule.dep_pos for rule in kept] == ['ADJ']
        everything = extract_agreement_rules(tb, ExtractionConfig.create(agree_coverage=0.81))
        assert [rule.dep_pos for rule in everything] == ['ADJ', 'DET']

    def test_coarse_deprel(self):
        """With coarse labels subtypes pool into one pattern."""
        blocks = [edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Sing', 'mod:poss'),
                  edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Sing', 'mod')]
        rules = extract_agreement_rules(treebank(*blocks), ExtractionConfig.create(agree_coverage=1.0,
                                                                                   coarse_deprel=True))
        assert [(rule.deprel, rule.support) for rule in rules] == [('mod', 2)]

    def test_empty_treebank(self):
        """An empty treebank yields no rules."""
        assert extract_agreement_rules(parse_treebank(''), ExtractionConfig.create()) == []


class TestAssignmentExtraction:
    """Test extract_assignment_rules."""

    def test_object_case_rule(self):
        """Object nouns take Acc or Nom; Dat and Gen stay below the inclusion threshold."""
        rules = extract_assignment_rules(object_case_treebank(), ExtractionConfig.create())
        by_key = {rule.key: rule for rule in rules}
        rule = by_key[('NOUN', 'VERB', 'comp:obj', 'dependent', 'Case')]
        assert rule.allowed_values == ('Acc', 'Nom')
        assert rule.kl == pytest.approx(0.911, abs=0.003)
        assert rule.support == 1000

    def test_no_divergence_no_rule(self):
        """A relation that mirrors the global distribution yields nothing."""
        blocks = []
        for case in ('Nom', 'Acc'):
            blocks.extend(edge_sentence('NOUN', 'Case={}'.format(case), 'VERB', '_', 'comp:obj')
                          for _ in range(100))
        assert extract_assignment_rules(treebank(*blocks), ExtractionConfig.create()) == []

    def test_min_relation_count(self):
        """Patterns below the frequency threshold are skipped."""
        tb = object_case_treebank()
        config = ExtractionConfig.create(min_relation_count=1001)
        keys = {rule.key for rule in extract_assignment_rules(tb, config)}
        assert ('NOUN', 'VERB', 'comp:obj', 'dependent', 'Case') not in keys

    def test_head_side(self):
        """Head-side distributions come from the head of the edge."""
        blocks = [edge_sentence('PRON', '_', 'VERB', 'VerbForm=Inf', 'comp:aux') for _ in range(100)]
        blocks.extend(block([row(1, 'geht', 'VERB', 'VerbForm=Fin', 0, 'root')]) for _ in range(300))
        rules = extract_assignment_rules(treebank(*blocks), ExtractionConfig.create())
        assert [(rule.key, rule.allowed_values) for rule in rules] == [
            (('VERB', 'PRON', 'comp:aux', 'head', 'VerbForm'), ('Inf',))]

    def test_multi_valued_weights(self):
        """A token with k values adds 1/k to each."""
        blocks = [edge_sentence('NOUN', 'Case=Acc,Nom', 'VERB', '_', 'comp:obj')]
        _, local, _ = AssignmentExtractor(ExtractionConfig.create()).count(treebank(*blocks))
        distribution = Distribution.from_counts(local[('NOUN', 'VERB', 'comp:obj', 'dependent', 'Case')])
        assert distribution.mass == {'Acc': 0.5, 'Nom': 0.5}


class TestExtractionProperties:
    """Test invariants of extract_rules."""

    @pytest.mark.parametrize('seed', range(20))
    def test_matches_oracle(self, seed):
        """Both extractors agree with a brute-force recount."""
        text = synthetic_treebank_text(seed)
        config = ExtractionConfig.create(min_relation_count=5, kl_threshold=0.1, agree_threshold=0.7)
        tb = parse_treebank(text)
        sentences = read_sentences(text)

        agreement = {rule.key: rule for rule in extract_agreement_rules(tb, config)}
        expected_agreement = oracle_agreement(sentences, 0.7, config.agree_coverage)
        assert set(agreement) == set(expected_agreement)
        for key, (support, fraction) in expected_agreement.items():
            assert agreement[key].support == support
            assert agreement[key].agree_fraction == pytest.approx(float(fraction), abs=1e-6)

        extractor = AssignmentExtractor(config)
        assignment = {rule.key: rule for rule in extractor.extract(tb)}
        _, local_counts, _ = extractor.count(tb)
        expected_assignment = oracle_assignment(sentences, 5, 0.1, config.value_inclusion_threshold,
                                                config.kl_epsilon)
        assert set(assignment) == set(expected_assignment)
        for key, expected in expected_assignment.items():
            rule = assignment[key]
            assert rule.allowed_values == expected['allowed_values']
            assert rule.support == expected['support']
            assert rule.kl == pytest.approx(expected['kl'], abs=1e-6)
            assert Distribution.from_counts(local_counts[key]).mass == expected['local']

    def test_jobs_do_not_change_rules(self):
        """Sharded counting gives the same rule file."""
        tb = parse_treebank(synthetic_treebank_text(3))
        config = ExtractionConfig.create(min_relation_count=5, kl_threshold=0.1)
        single, _ = extract_rules(tb, config, 'xx', 'UD', jobs=1)
        sharded, _ = extract_rules(tb, config, 'xx', 'UD', jobs=4)
        assert dumps_rules(single) == dumps_rules(sharded)

    def test_deterministic(self):
        """Two runs write the same rule file."""
        tb = parse_treebank(synthetic_treebank_text(5))
        first, _ = extract_rules(tb, ExtractionConfig.create(min_relation_count=5))
        second, _ = extract_rules(tb, ExtractionConfig.create(min_relation_count=5))
        assert dumps_rules(first) == dumps_rules(second)

    @pytest.mark.parametrize('low, high', [(0.6, 0.8), (0.8, 0.95)])
    def test_agree_threshold_monotone(self, low, high):
        """Raising the agreement threshold never adds a rule at full coverage."""
        tb = parse_treebank(synthetic_treebank_text(7))
        loose = extract_agreement_rules(tb, ExtractionConfig.create(agree_threshold=low, agree_coverage=1.0))
        strict = extract_agreement_rules(tb, ExtractionConfig.create(agree_threshold=high, agree_coverage=1.0))
        assert {rule.key for rule in strict} <= {rule.key for rule in loose}

    def test_min_relation_count_monotone(self):
        """Raising the frequency threshold never adds a rule."""
        tb = parse_treebank(synthetic_treebank_text(11))
        loose = extract_assignment_rules(tb, ExtractionConfig.create(min_relation_count=2, kl_threshold=0.1))
        strict = extract_assignment_rules(tb, ExtractionConfig.create(min_relation_count=20, kl_threshold=0.1))
        assert {rule.key for rule in strict} <= {rule.key for rule in loose}

    def test_summary(self):
        """The summary counts rules by kind and feature."""
        rule_set, summary = extract_rules(object_case_treebank(), language='de', schema='SUD')
        assert summary['assignment_rules'] == len(rule_set.assignment)
        assert summary['by_feature']['Case']['assignment'] == len(rule_set.assignment)
        assert rule_set.language == 'de'
