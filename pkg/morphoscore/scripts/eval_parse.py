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
"""Parser accuracy on a noised treebank."""

from morphoscore.common.output import emit, provenance
from morphoscore.noise.robustness import evaluate_parse, parse_report_to_dict
from morphoscore.treebank.conllu import load_treebank
from morphoscore.utils.command import BaseCommand, ExistingPathAction
from morphoscore.utils.tools import dump_json


class Command(BaseCommand):
    """Eval-parse command."""
    name = 'eval-parse'
    description = 'compare parser output with a gold noised treebank'

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('gold', action=ExistingPathAction, help='Gold CoNLL-U, e.g. written by perturb.')
        parser.add_argument('predicted', action=ExistingPathAction, help='Parser output on the same text.')
        parser.add_argument('--output', '-o', help='JSON report path. Default: standard output.')

    def run(self, args):
        """
        Run to evaluate.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        report = evaluate_parse(load_treebank(args.gold), load_treebank(args.predicted))
        data = parse_report_to_dict(report)
        data.update(provenance())
        emit(dump_json(data), args.output)
