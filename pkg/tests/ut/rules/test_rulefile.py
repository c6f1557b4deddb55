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
    Test rule file reading and writing.
Usage:
    pytest tests/ut/rules
"""
import io
import json
import os
import tempfile
from unittest import TestCase

from morphoscore.common.exceptions.exceptions import RuleFileError
from morphoscore.rules.extraction import extract_rules
from morphoscore.rules.model import ExtractionConfig, RuleSet
from morphoscore.rules.rulefile import dumps_rules, loads_rules, save_rules, load_rules, rule_hash, \
    rules_to_dict
from morphoscore.treebank.conllu import parse_treebank

from ...utils.fixtures import german_rule_set
from ...utils.synthetic import synthetic_treebank_text


class TestRuleFile(TestCase):
    """Test the rule file format."""

    def test_round_trip(self):
        """A saved rule set loads back equal."""
        rule_set = german_rule_set()
        self.assertEqual(loads_rules(dumps_rules(rule_set)), rule_set)

    def test_extracted_round_trip(self):
        """Rules extracted from a treebank load back equal, numbers included."""
        config = ExtractionConfig.create(min_relation_count=5, kl_threshold=0.1)
        rule_set, _ = extract_rules(parse_treebank(synthetic_treebank_text(3)), config, language='xx', schema='UD')
        self.assertTrue(rule_set.agreement)
        self.assertTrue(rule_set.assignment)
        self.assertEqual(loads_rules(dumps_rules(rule_set)), rule_set)

    def test_empty_round_trip(self):
        """An empty rule set round-trips."""
        rule_set = RuleSet('xx', 'UD')
        self.assertEqual(loads_rules(dumps_rules(rule_set)), rule_set)

    def test_stream_and_path(self):
        """save_rules and load_rules accept streams and paths."""
        rule_set = german_rule_set()
        stream = io.StringIO()
        save_rules(rule_set, stream)
        self.assertEqual(load_rules(io.StringIO(stream.getvalue())), rule_set)

        path = os.path.join(tempfile.mkdtemp(), 'rules.json')
        save_rules(rule_set, path)
        self.assertEqual(load_rules(path), rule_set)

    def test_stable_text(self):
        """The same rule set always serializes to the same text and hash."""
        self.assertEqual(dumps_rules(german_rule_set()), dumps_rules(german_rule_set()))
        self.assertEqual(rule_hash(german_rule_set()), rule_hash(german_rule_set()))
        self.assertNotEqual(rule_hash(german_rule_set()), rule_hash(RuleSet('de', 'SUD')))

    def test_unknown_version(self):
        """A rule file of another version is rejected."""
        data = rules_to_dict(german_rule_set())
        data['version'] = 99
        with self.assertRaisesRegex(RuleFileError, 'unsupported version 99'):
            loads_rules(json.dumps(data))

    def test_not_json(self):
        """Invalid JSON is rejected."""
        with self.assertRaisesRegex(RuleFileError, 'not valid JSON'):
            loads_rules('{')

    def test_top_level_list(self):
        """A JSON array is rejected."""
        with self.assertRaisesRegex(RuleFileError, 'JSON object'):
            loads_rules('[]')

    def test_duplicate_rule(self):
        """Two rules with one key are rejected."""
        data = rules_to_dict(german_rule_set())
        data['agreement'].append(dict(data['agreement'][0]))
        with self.assertRaisesRegex(RuleFileError, 'duplicate agreement rule key agr-mod-ADJ-NOUN:Case'):
            loads_rules(json.dumps(data))

    def test_bad_side(self):
        """An assignment side other than dependent or head is rejected."""
        data = rules_to_dict(german_rule_set())
        data['assignment'][0]['side'] = 'left'
        with self.assertRaisesRegex(RuleFileError, 'assignment.0.side'):
            loads_rules(json.dumps(data))

    def test_empty_allowed_values(self):
        """An assignment rule must allow some value."""
        data = rules_to_dict(german_rule_set())
        data['assignment'][1]['allowed_values'] = []
        with self.assertRaisesRegex(RuleFileError, 'allowed_values'):
            loads_rules(json.dumps(data))

    def test_bad_config(self):
        """An out of range threshold in the config is rejected."""
        data = rules_to_dict(german_rule_set())
        data['config']['agree_threshold'] = 1.5
        with self.assertRaisesRegex(RuleFileError, 'agree_threshold'):
            loads_rules(json.dumps(data))
