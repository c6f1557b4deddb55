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
"""Extract morphosyntactic rules from a treebank."""

from morphoscore.common.output import emit, provenance
from morphoscore.conf import settings
from morphoscore.rules.extraction import extract_rules
from morphoscore.rules.model import ExtractionConfig
from morphoscore.rules.rulefile import save_rules
from morphoscore.treebank.conllu import load_treebank
from morphoscore.utils.command import BaseCommand, ExistingPathAction, PositiveIntAction, \
    UnitIntervalAction, add_jobs_argument
from morphoscore.utils.tools import dump_json, to_json_number


class Command(BaseCommand):
    """Extract-rules command."""
    name = 'extract-rules'
    description = 'extract agreement and assignment rules from a CoNLL-U treebank'

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('treebank', action=ExistingPathAction, help='CoNLL-U treebank to learn from.')
        parser.add_argument('--output', '-o', required=True, help='Rule file to write.')
        parser.add_argument('--language', default='', help='Language label stored in the rule file.')
        parser.add_argument('--schema', default='', help='Annotation schema label, e.g. UD or SUD.')
        parser.add_argument(
            '--agree-threshold',
            type=float,
            action=UnitIntervalAction,
            help='Minimal agreeing fraction of a kept pattern. Default value is %s.' % settings.AGREE_THRESHOLD)
        parser.add_argument(
            '--agree-coverage',
            type=float,
            action=UnitIntervalAction,
            help='Share of candidate instances covered by kept agreement rules. '
                 'Default value is %s.' % settings.AGREE_COVERAGE)
        parser.add_argument(
            '--kl-threshold',
            type=float,
            help='Minimal divergence of an assignment rule. Default value is %s.' % settings.KL_THRESHOLD)
        parser.add_argument(
            '--min-relation-count',
            type=int,
            action=PositiveIntAction,
            help='Minimal support of an assignment rule. Default value is %s.' % settings.MIN_RELATION_COUNT)
        parser.add_argument(
            '--value-inclusion-threshold',
            type=float,
            action=UnitIntervalAction,
            help='Minimal probability of an allowed value. '
                 'Default value is %s.' % settings.VALUE_INCLUSION_THRESHOLD)
        parser.add_argument(
            '--coarse-deprel',
            action='store_true',
            help='Strip relation subtypes before counting.')
        add_jobs_argument(parser)

    def update_settings(self, args):
        """
        Validate thresholds before anything is read or written.

        Args:
            args (Namespace): parsed arguments to hold customized parameters.
        """
        args.config = ExtractionConfig.create(
            agree_threshold=args.agree_threshold,
            agree_coverage=args.agree_coverage,
            kl_threshold=args.kl_threshold,
            min_relation_count=args.min_relation_count,
            value_inclusion_threshold=args.value_inclusion_threshold,
            coarse_deprel=args.coarse_deprel,
        )

    def run(self, args):
        """
        Run to extract.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        treebank = load_treebank(args.treebank)
        rule_set, summary = extract_rules(treebank, args.config, args.language, args.schema, args.jobs)
        save_rules(rule_set, args.output)
        self.logger.info('Wrote %d rules to %s.', len(rule_set), args.output)

        summary['agreement_coverage'] = to_json_number(summary.get('agreement_coverage'))
        summary.update(provenance(rule_set))
        emit(dump_json(summary))
