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
"""Score a parsed corpus against a rule file."""

from morphoscore.common.enums import RuleKindFilter
from morphoscore.common.output import emit, provenance
from morphoscore.rules.rulefile import load_rules
from morphoscore.scoring.report import report_to_dict, report_to_tsv, segments_to_tsv
from morphoscore.scoring.scorer import score_corpus
from morphoscore.treebank.conllu import load_treebank
from morphoscore.utils.command import BaseCommand, ExistingPathAction, add_jobs_argument
from morphoscore.utils.tools import dump_json, write_text


class Command(BaseCommand):
    """Score command."""
    name = 'score'
    description = 'score the morphosyntactic well-formedness of a parsed corpus'

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('rules', action=ExistingPathAction, help='Rule file written by extract-rules.')
        parser.add_argument('treebank', action=ExistingPathAction, help='Parsed CoNLL-U corpus to score.')
        parser.add_argument('--output', '-o', help='JSON report path. Default: standard output.')
        parser.add_argument('--tsv', help='Per-rule TSV summary path.')
        parser.add_argument('--segments', help='Per-sentence score TSV path.')
        parser.add_argument(
            '--rule-kind',
            choices=RuleKindFilter.list_members(),
            default=RuleKindFilter.ALL.value,
            help='Rules to score with. Default value is all.')
        add_jobs_argument(parser)

    def run(self, args):
        """
        Run to score.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        rule_set = load_rules(args.rules)
        active = rule_set.restrict(args.rule_kind)
        treebank = load_treebank(args.treebank)
        report = score_corpus(treebank, active, segments=args.segments is not None, jobs=args.jobs)

        data = report_to_dict(report, provenance(rule_set))
        data['rule_kind'] = args.rule_kind
        if args.tsv is not None:
            write_text(args.tsv, report_to_tsv(report))
        if args.segments is not None:
            write_text(args.segments, segments_to_tsv(report.segment_scores))
        emit(dump_json(data), args.output)
