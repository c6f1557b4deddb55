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
"""Evaluate grammar-error identification against gold marks."""

from morphoscore.common.enums import RuleKindFilter
from morphoscore.common.output import emit, provenance
from morphoscore.gei.evaluation import evaluate_gei
from morphoscore.gei.gold import load_gold_file, gold_from_misc
from morphoscore.rules.rulefile import load_rules
from morphoscore.treebank.conllu import load_treebank
from morphoscore.utils.command import BaseCommand, ExistingPathAction, add_jobs_argument
from morphoscore.utils.tools import dump_json


class Command(BaseCommand):
    """GEI evaluation command."""
    name = 'gei-eval'
    description = 'evaluate rule-based grammar-error identification'

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('rules', action=ExistingPathAction, help='Rule file written by extract-rules.')
        parser.add_argument('treebank', action=ExistingPathAction, help='Parsed CoNLL-U corpus.')
        parser.add_argument('--gold', action=ExistingPathAction,
                            help='Gold error TSV (sent_id, token_id). Default: GoldError=Yes in MISC.')
        parser.add_argument(
            '--rule-kind',
            choices=RuleKindFilter.list_members(),
            default=RuleKindFilter.ALL.value,
            help='Rules to check with. Default value is all.')
        parser.add_argument('--output', '-o', help='JSON report path. Default: standard output.')
        add_jobs_argument(parser)

    def run(self, args):
        """
        Run to evaluate.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        rule_set = load_rules(args.rules)
        treebank = load_treebank(args.treebank)
        gold = load_gold_file(args.gold) if args.gold else gold_from_misc(treebank)
        gold.validate(treebank)

        report = evaluate_gei(treebank, gold, rule_set.restrict(args.rule_kind), args.jobs)
        data = report.to_dict()
        data['gold_marks'] = len(gold)
        data['rule_kind'] = args.rule_kind
        data.update(provenance(rule_set))
        emit(dump_json(data), args.output)
