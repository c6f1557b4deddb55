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
"""Dependency treebank model and CoNLL-U codec."""
from morphoscore.treebank.model import FeatureBundle, Token, MultiwordToken, EmptyNode, \
    EdgeInstance, Sentence, Treebank, coarse_deprel, edges
from morphoscore.treebank.conllu import parse_treebank, serialize_treebank, \
    load_treebank, dump_treebank, validate_sentence, validate_treebank

__all__ = [
    'FeatureBundle', 'Token', 'MultiwordToken', 'EmptyNode', 'EdgeInstance',
    'Sentence', 'Treebank', 'coarse_deprel', 'edges',
    'parse_treebank', 'serialize_treebank', 'load_treebank', 'dump_treebank',
    'validate_sentence', 'validate_treebank',
]
