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
"""Write a morphology-noised copy of a treebank."""

from morphoscore.common.output import emit, provenance
from morphoscore.conf import settings
from morphoscore.noise.lexicon import load_unimorph_file
from morphoscore.noise.mapping import default_feature_mapping, load_feature_mapping_file
from morphoscore.noise.perturb import perturb_treebank, records_to_tsv
from morphoscore.treebank.conllu import load_treebank, dump_treebank
from morphoscore.utils.command import BaseCommand, ExistingPathAction, NonNegativeIntAction, add_jobs_argument
from morphoscore.utils.tools import dump_json, write_text, round_float


class Command(BaseCommand):
    """Perturb command."""
    name = 'perturb'
    description = 'replace one word per sentence with an alternate inflection'

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('treebank', action=ExistingPathAction, help='CoNLL-U treebank to alter.')
        parser.add_argument('--lexicon', action=ExistingPathAction, required=True,
                            help='UniMorph lexicon TSV.')
        parser.add_argument('--mapping', action=ExistingPathAction,
                            help='UD to UniMorph mapping TSV. Default: the shipped mapping.')
        parser.add_argument('--output', '-o', required=True, help='Altered CoNLL-U path.')
        parser.add_argument('--manifest', help='Alteration manifest TSV path.')
        parser.add_argument(
            '--seed',
            type=int,
            action=NonNegativeIntAction,
            default=settings.DEFAULT_SEED,
            help='Random seed. Default value is %s.' % settings.DEFAULT_SEED)
        parser.add_argument('--concat', action='store_true',
                            help='Write every original sentence followed by its altered copy.')
        parser.add_argument('--keep-gold-feats', action='store_true',
                            help='Keep the original FEATS on altered words.')
        add_jobs_argument(parser)

    def run(self, args):
        """
        Run to perturb.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        feature_mapping = (load_feature_mapping_file(args.mapping) if args.mapping
                           else default_feature_mapping())
        lexicon = load_unimorph_file(args.lexicon)
        treebank = load_treebank(args.treebank)
        result = perturb_treebank(treebank, lexicon, feature_mapping, seed=args.seed, concat=args.concat,
                                  keep_gold_feats=args.keep_gold_feats, jobs=args.jobs)

        dump_treebank(result.treebank, args.output)
        if args.manifest is not None:
            write_text(args.manifest, records_to_tsv(result.records))

        summary = {
            'sentences': result.total,
            'altered': result.altered,
            'coverage': round_float(result.coverage),
            'seed': args.seed,
        }
        summary.update(provenance())
        emit(dump_json(summary))
