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
"""UD to UniMorph feature mapping."""
import os

from morphoscore.common.exceptions.exceptions import FeatureMappingError
from morphoscore.utils.tools import read_text

# Pseudo-feature carrying the part-of-speech tag.
UPOS_FEATURE = 'UPOS'

DEFAULT_MAPPING_PATH = os.path.join(os.path.dirname(__file__), 'data', 'ud_unimorph.tsv')


class FeatureMapping:
    """
    Bidirectional map between (UD feature, UD value) and UniMorph tags.

    Args:
        rows (list[tuple]): (feature, value, tag) rows.

    Raises:
        FeatureMappingError: If one feature maps two values to one tag, a
            (feature, value) pair is mapped twice, or a tag is claimed by
            two features.
    """

    def __init__(self, rows=()):
        self.forward = {}
        self.inverse = {}
        for feature, value, tag in rows:
            if (feature, value) in self.forward:
                raise FeatureMappingError('{}={} is mapped twice'.format(feature, value))
            if tag in self.inverse:
                other_feature, other_value = self.inverse[tag]
                raise FeatureMappingError('tag {} is used for both {}={} and {}={}'.format(
                    tag, other_feature, other_value, feature, value))
            self.forward[(feature, value)] = tag
            self.inverse[tag] = (feature, value)

    def tag(self, feature, value):
        return self.forward.get((feature, value))

    def resolve(self, tag):
        """(feature, value) of a tag, None for tags outside the mapping."""
        return self.inverse.get(tag)

    def token_dimensions(self, token):
        """
        Map a token's single-valued mapped features and its UPOS to tags.

        Args:
            token (Token): Token to map.

        Returns:
            dict, UD feature name (or `UPOS`) to UniMorph tag.
        """
        dimensions = {}
        upos_tag = self.tag(UPOS_FEATURE, token.upos)
        if upos_tag is not None:
            dimensions[UPOS_FEATURE] = upos_tag
        for feature, values in token.feats.items():
            if len(values) != 1:
                continue
            tag = self.tag(feature, values[0])
            if tag is not None:
                dimensions[feature] = tag
        return dimensions

    def __len__(self):
        return len(self.forward)


def load_feature_mapping(stream):
    """
    Read a mapping TSV, one `UDFeature<TAB>UDValue<TAB>UniMorphTag` row per line.

    Blank lines and lines starting with `#` are skipped.

    Args:
        stream (Union[str, TextIO]): TSV text or readable stream.

    Returns:
        FeatureMapping, loaded mapping.

    Raises:
        FeatureMappingError: If a row is malformed or the mapping is ambiguous.
    """
    text = stream.read() if hasattr(stream, 'read') else stream
    rows = []
    for line_no, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip() or line.startswith('#'):
            continue
        columns = line.split('\t')
        if len(columns) != 3 or not all(columns):
            raise FeatureMappingError('line {}: expected 3 non-empty columns'.format(line_no))
        rows.append(tuple(columns))
    return FeatureMapping(rows)


def load_feature_mapping_file(path):
    """Read a mapping TSV file."""
    return load_feature_mapping(read_text(path))


def default_feature_mapping():
    """The shipped mapping for UPOS, Case, Number, Gender, Person, Tense, Mood and VerbForm."""
    return load_feature_mapping_file(DEFAULT_MAPPING_PATH)
