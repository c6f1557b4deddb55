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
"""Morphology noise for robust-parser training and evaluation."""
from morphoscore.noise.lexicon import LexiconEntry, InflectionLexicon, load_unimorph, load_unimorph_file
from morphoscore.noise.mapping import UPOS_FEATURE, FeatureMapping, load_feature_mapping, \
    load_feature_mapping_file, default_feature_mapping
from morphoscore.noise.perturb import AlterationRecord, PerturbationResult, candidate_alterations, \
    perturb_treebank, records_to_tsv
from morphoscore.noise.robustness import ParseScores, ParseReport, evaluate_parse, parse_report_to_dict

__all__ = [
    'LexiconEntry', 'InflectionLexicon', 'load_unimorph', 'load_unimorph_file',
    'UPOS_FEATURE', 'FeatureMapping', 'load_feature_mapping', 'load_feature_mapping_file',
    'default_feature_mapping',
    'AlterationRecord', 'PerturbationResult', 'candidate_alterations', 'perturb_treebank', 'records_to_tsv',
    'ParseScores', 'ParseReport', 'evaluate_parse', 'parse_report_to_dict',
]
