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
"""Domain error codes and messages."""
from enum import Enum, unique

from morphoscore.utils.constant import TreebankErrors as TreebankErrorCodes
from morphoscore.utils.constant import RulesErrors as RulesErrorCodes
from morphoscore.utils.constant import ScoringErrors as ScoringErrorCodes
from morphoscore.utils.constant import NoiseErrors as NoiseErrorCodes
from morphoscore.utils.constant import GeiErrors as GeiErrorCodes
from morphoscore.utils.constant import StatsErrors as StatsErrorCodes


_PARAM_ERROR_MASK = 0b00001 << 7
_FORMAT_ERROR_MASK = 0b00010 << 7
_DATA_ERROR_MASK = 0b00011 << 7


@unique
class TreebankErrors(TreebankErrorCodes):
    """Treebank error codes."""
    PARSE_ERROR = 0 | _FORMAT_ERROR_MASK
    STRUCTURE_ERROR = 0 | _DATA_ERROR_MASK
    ALIGNMENT_ERROR = 1 | _DATA_ERROR_MASK


@unique
class RulesErrors(RulesErrorCodes):
    """Rules error codes."""
    PARAM_VALUE_ERROR = 0 | _PARAM_ERROR_MASK
    RULE_FILE_ERROR = 0 | _FORMAT_ERROR_MASK


@unique
class ScoringErrors(ScoringErrorCodes):
    """Scoring error codes."""
    PAIRING_ERROR = 0 | _DATA_ERROR_MASK


@unique
class NoiseErrors(NoiseErrorCodes):
    """Noise error codes."""
    LEXICON_PARSE_ERROR = 0 | _FORMAT_ERROR_MASK
    FEATURE_MAPPING_ERROR = 1 | _FORMAT_ERROR_MASK


@unique
class GeiErrors(GeiErrorCodes):
    """GEI error codes."""
    GOLD_FORMAT_ERROR = 0 | _FORMAT_ERROR_MASK
    GOLD_UNRESOLVED_ERROR = 0 | _DATA_ERROR_MASK


@unique
class StatsErrors(StatsErrorCodes):
    """Stats error codes."""
    PARAM_VALUE_ERROR = 0 | _PARAM_ERROR_MASK
    SCORE_TABLE_ERROR = 0 | _FORMAT_ERROR_MASK


@unique
class ErrorMsg(Enum):
    """Domain error messages."""
    TREEBANK_PARSE_ERROR = "CoNLL-U parse error at line {}: {}"
    TREEBANK_STRUCTURE_ERROR = "Invalid tree in sentence {}: {}"
    TREEBANK_ALIGNMENT_ERROR = "Treebanks can not be aligned: {}"

    RULE_PARAM_ERROR = "Invalid extraction config. {}"
    RULE_FILE_ERROR = "Invalid rule file. {}"

    SCORING_PAIRING_ERROR = "Original and altered treebanks can not be paired: {}"

    LEXICON_PARSE_ERROR = "Inflection lexicon parse error at line {}: {}"
    FEATURE_MAPPING_ERROR = "Invalid feature mapping. {}"

    GOLD_FORMAT_ERROR = "Invalid gold error file. {}"
    GOLD_UNRESOLVED_ERROR = "Gold error mark does not resolve to a token: {}"

    STATS_PARAM_ERROR = "Invalid statistics input. {}"
    SCORE_TABLE_ERROR = "Invalid score table. {}"
