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
"""Rule-based grammaticality scoring."""
from morphoscore.scoring.checker import RuleInstance, RuleIndex, check_agreement, \
    check_assignment, applicable_instances
from morphoscore.scoring.scorer import RuleCount, SegmentScore, CorpusReport, score_segment, \
    score_corpus, score_indexed, mean_segment_score, schema_warnings
from morphoscore.scoring.report import report_to_dict, report_to_tsv, segments_to_tsv
from morphoscore.scoring.contrast import ContrastiveReport, contrastive_accuracy

__all__ = [
    'RuleInstance', 'RuleIndex', 'check_agreement', 'check_assignment', 'applicable_instances',
    'RuleCount', 'SegmentScore', 'CorpusReport', 'score_segment', 'score_corpus',
    'score_indexed', 'mean_segment_score', 'schema_warnings',
    'report_to_dict', 'report_to_tsv', 'segments_to_tsv',
    'ContrastiveReport', 'contrastive_accuracy',
]
