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
"""Contrastive accuracy on original and altered sentences."""

from morphoscore.common.output import emit, provenance
from morphoscore.rules.rulefile import load_rules
from morphoscore.scoring.contrast import contrastive_accuracy
from morphoscore.treebank.conllu import load_treebank
from morphoscore.utils.command import BaseCommand, ExistingPathAction
from morphoscore.utils.tools import dump_json, to_json_number


class Command(BaseCommand):
    """Contrast command."""
    name = 'contrast'
    description = 'how often the score prefers original sentences to their altered copies'

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('rules', action=ExistingPathAction, help='Rule file written by extract-rules.')
        parser.add_argument('original', action=ExistingPathAction, help='Original parsed CoNLL-U.')
        parser.add_argument('altered', action=ExistingPathAction, help='Altered parsed CoNLL-U.')
        parser.add_argument('--output', '-o', help='JSON report path. Default: standard output.')

    def run(self, args):
        """
        Run to compare.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        rule_set = load_rules(args.rules)
        report = contrastive_accuracy(load_treebank(args.original), load_treebank(args.altered), rule_set)
        data = {
            'pairs': report.pairs,
            'skipped': report.skipped,
            'accuracy': to_json_number(report.accuracy),
            'perfect_pairs': report.perfect_pairs,
            'accuracy_excluding_perfect': to_json_number(report.accuracy_excluding_perfect),
        }
        data.update(provenance(rule_set))
        emit(dump_json(data), args.output)
