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
"""Score report formats."""
from morphoscore.scoring.scorer import mean_segment_score
from morphoscore.utils.tools import to_json_number, format_number

# Rules are equally weighted; the field is kept for weighted averaging.
RULE_WEIGHT = 1.0


def _rule_kind(label):
    return 'agree' if label.startswith('agr-') else 'as'


def report_to_dict(report, provenance=None):
    """
    Convert a corpus report to a JSON-compatible dict.

    Args:
        report (CorpusReport): Scoring result.
        provenance (dict): Extra top-level entries such as tool version and rule hash.

    Returns:
        dict, report content; undefined scores are `NA`.
    """
    rules = []
    for label, count in report.per_rule.items():
        rules.append({
            'rule': label,
            'kind': _rule_kind(label),
            'applicable': count.applicable,
            'satisfied': count.satisfied,
            'ratio': to_json_number(count.ratio),
            'weight': RULE_WEIGHT,
        })
    data = {
        'corpus_score': to_json_number(report.corpus_score),
        'kind_scores': {kind: to_json_number(score) for kind, score in report.kind_scores.items()},
        'rules': rules,
        'rules_applied': sum(1 for count in report.per_rule.values() if count.applicable),
        'warnings': list(report.warnings),
    }
    if report.segment_scores is not None:
        data['segments'] = {
            'total': len(report.segment_scores),
            'undefined': sum(1 for segment in report.segment_scores if segment.score is None),
            'mean_defined_score': to_json_number(mean_segment_score(report.segment_scores)),
        }
    if provenance:
        data.update(provenance)
    return data


def report_to_tsv(report):
    """
    Per-rule summary TSV with a final corpus_score row.

    Returns:
        str, TSV text with header `rule_key applicable satisfied ratio`.
    """
    lines = ['rule_key\tapplicable\tsatisfied\tratio']
    for label, count in report.per_rule.items():
        lines.append('{}\t{}\t{}\t{}'.format(label, count.applicable, count.satisfied,
                                             format_number(count.ratio)))
    lines.append('corpus_score\t\t\t{}'.format(format_number(report.corpus_score)))
    return '\n'.join(lines) + '\n'


def segments_to_tsv(segment_scores):
    """
    One row per sentence.

    Returns:
        str, TSV text with header `sent_id score`, `NA` for undefined scores.
    """
    lines = ['sent_id\tscore']
    for segment in segment_scores:
        lines.append('{}\t{}'.format(segment.sent_id, format_number(segment.score)))
    return '\n'.join(lines) + '\n'
