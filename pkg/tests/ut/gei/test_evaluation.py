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
    Test grammar-error identification against gold marks.
Usage:
    pytest tests/ut/gei
"""
import pytest

from morphoscore.gei.evaluation import evaluate_gei, violating_neighbors, PRReport
from morphoscore.gei.gold import GoldErrors
from morphoscore.rules.model import AgreementRule, RuleSet

from ...utils.builders import treebank, edge_sentence
from ...utils.fixtures import GERMAN_S1, GERMAN_S2, GERMAN_TEXT, german_rule_set

NUMBER_RULES = RuleSet('xx', 'UD', [AgreementRule('ADJ', 'NOUN', 'mod', 'Number', 10, 1.0)])


def violated_edge():
    return treebank(edge_sentence('ADJ', 'Number=Sing', 'NOUN', 'Number=Plur', 'mod', sent_id='e'))


class TestViolatingNeighbors:
    """Test violating_neighbors."""

    def test_subject_verb_mismatch(self):
        """The plural auxiliary is linked to its singular subject by a violation."""
        sentence = treebank(GERMAN_S2).sentences[0]
        assert violating_neighbors(sentence.tokens[1], sentence, german_rule_set()) == {1}
        assert violating_neighbors(sentence.tokens[0], sentence, german_rule_set()) == {2}
        assert violating_neighbors(sentence.tokens[3], sentence, german_rule_set()) == {3}
        assert violating_neighbors(sentence.tokens[4], sentence, german_rule_set()) == set()

    def test_grammatical_sentence(self):
        """No token of a grammatical sentence has violating neighbors."""
        sentence = treebank(GERMAN_S1).sentences[0]
        for token in sentence.tokens:
            assert violating_neighbors(token, sentence, german_rule_set()) == set()


class TestEvaluateGei:
    """Test evaluate_gei."""

    @pytest.mark.parametrize('marks, expected', [
        ([('e', 1), ('e', 2)], (2, 0, 0)),
        ([], (0, 1.0, 0)),
        ([('e', 1)], (1, 0, 0)),
    ])
    def test_single_violated_edge(self, marks, expected):
        """Both, neither and one endpoint marked."""
        report = evaluate_gei(violated_edge(), GoldErrors(marks), NUMBER_RULES)
        assert (report.tp, float(report.fp), report.fn) == expected

    def test_german(self):
        """The unmarked adjective and noun each add half a false positive."""
        gold = GoldErrors([('s2', 2)])
        report = evaluate_gei(treebank(GERMAN_TEXT), gold, german_rule_set())
        assert (report.tp, report.fp, report.fn) == (1, 1, 0)
        assert report.precision == 0.5
        assert report.recall == 1.0

    def test_empty_rule_set(self):
        """Without rules every gold token is missed and precision is undefined."""
        gold = GoldErrors([('s2', 2), ('s2', 3)])
        report = evaluate_gei(treebank(GERMAN_TEXT), gold, RuleSet('de', 'SUD'))
        assert (report.tp, report.fp, report.fn) == (0, 0, 2)
        assert report.precision is None
        assert report.to_dict()['precision'] == 'NA'
        assert report.to_dict()['recall'] == 0.0

    def test_gold_without_hypothesis_is_missed(self):
        """A gold token with no violation counts as a false negative."""
        gold = GoldErrors([('s2', 5)])
        report = evaluate_gei(treebank(GERMAN_S2), gold, german_rule_set())
        assert report.fn == 1

    def test_jobs_and_order(self):
        """Sharding and sentence order do not change the counts."""
        gold = GoldErrors([('s2', 2)])
        forward = evaluate_gei(treebank(GERMAN_S1, GERMAN_S2), gold, german_rule_set())
        backward = evaluate_gei(treebank(GERMAN_S2, GERMAN_S1), gold, german_rule_set(), jobs=2)
        assert forward == backward


def test_pr_report_dict():
    """fp is written as a float."""
    assert PRReport(1, 0.5, 1).to_dict() == {'tp': 1, 'fp': 0.5, 'fn': 1, 'precision': 0.666667,
                                             'recall': 0.5}
