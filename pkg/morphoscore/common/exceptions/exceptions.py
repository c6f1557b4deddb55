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
"""Definition of domain exceptions."""
from morphoscore.utils.exceptions import MorphoScoreException
from morphoscore.common.exceptions.error_code import TreebankErrors, RulesErrors, \
    ScoringErrors, NoiseErrors, GeiErrors, StatsErrors, ErrorMsg


class TreebankParseError(MorphoScoreException):
    """Malformed CoNLL-U input."""

    def __init__(self, line_no, msg):
        super(TreebankParseError, self).__init__(
            error=TreebankErrors.PARSE_ERROR,
            message=ErrorMsg.TREEBANK_PARSE_ERROR.value.format(line_no, msg)
        )
        self.line_no = line_no


class TreebankStructureError(MorphoScoreException):
    """Sentence whose head graph is not a single rooted tree."""

    def __init__(self, sent_id, msg):
        super(TreebankStructureError, self).__init__(
            error=TreebankErrors.STRUCTURE_ERROR,
            message=ErrorMsg.TREEBANK_STRUCTURE_ERROR.value.format(sent_id, msg)
        )
        self.sent_id = sent_id


class TreebankAlignmentError(MorphoScoreException):
    """Gold and predicted treebanks differ in shape."""

    def __init__(self, msg):
        super(TreebankAlignmentError, self).__init__(
            error=TreebankErrors.ALIGNMENT_ERROR,
            message=ErrorMsg.TREEBANK_ALIGNMENT_ERROR.value.format(msg)
        )


class RuleParamError(MorphoScoreException):
    """Invalid extraction config."""

    def __init__(self, msg):
        super(RuleParamError, self).__init__(
            error=RulesErrors.PARAM_VALUE_ERROR,
            message=ErrorMsg.RULE_PARAM_ERROR.value.format(msg)
        )


class RuleFileError(MorphoScoreException):
    """Invalid rule file content."""

    def __init__(self, msg):
        super(RuleFileError, self).__init__(
            error=RulesErrors.RULE_FILE_ERROR,
            message=ErrorMsg.RULE_FILE_ERROR.value.format(msg)
        )


class ScoringPairingError(MorphoScoreException):
    """Altered sentence without an original counterpart."""

    def __init__(self, msg):
        super(ScoringPairingError, self).__init__(
            error=ScoringErrors.PAIRING_ERROR,
            message=ErrorMsg.SCORING_PAIRING_ERROR.value.format(msg)
        )


class LexiconParseError(MorphoScoreException):
    """Malformed UniMorph row."""

    def __init__(self, line_no, msg):
        super(LexiconParseError, self).__init__(
            error=NoiseErrors.LEXICON_PARSE_ERROR,
            message=ErrorMsg.LEXICON_PARSE_ERROR.value.format(line_no, msg)
        )
        self.line_no = line_no


class FeatureMappingError(MorphoScoreException):
    """Malformed or ambiguous feature mapping."""

    def __init__(self, msg):
        super(FeatureMappingError, self).__init__(
            error=NoiseErrors.FEATURE_MAPPING_ERROR,
            message=ErrorMsg.FEATURE_MAPPING_ERROR.value.format(msg)
        )


class GoldFormatError(MorphoScoreException):
    """Malformed gold error sidecar."""

    def __init__(self, msg):
        super(GoldFormatError, self).__init__(
            error=GeiErrors.GOLD_FORMAT_ERROR,
            message=ErrorMsg.GOLD_FORMAT_ERROR.value.format(msg)
        )


class GoldUnresolvedError(MorphoScoreException):
    """Gold error mark pointing outside the treebank."""

    def __init__(self, msg):
        super(GoldUnresolvedError, self).__init__(
            error=GeiErrors.GOLD_UNRESOLVED_ERROR,
            message=ErrorMsg.GOLD_UNRESOLVED_ERROR.value.format(msg)
        )


class StatsParamError(MorphoScoreException):
    """Invalid input to a statistic."""

    def __init__(self, msg):
        super(StatsParamError, self).__init__(
            error=StatsErrors.PARAM_VALUE_ERROR,
            message=ErrorMsg.STATS_PARAM_ERROR.value.format(msg)
        )


class ScoreTableError(MorphoScoreException):
    """Malformed system score table."""

    def __init__(self, msg):
        super(ScoreTableError, self).__init__(
            error=StatsErrors.SCORE_TABLE_ERROR,
            message=ErrorMsg.SCORE_TABLE_ERROR.value.format(msg)
        )
