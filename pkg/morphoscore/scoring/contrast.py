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
"""Contrastive evaluation on original and altered sentence pairs."""
from collections import namedtuple

from morphoscore.common.exceptions.exceptions import ScoringPairingError
from morphoscore.common.log import logger
from morphoscore.conf import settings
from morphoscore.scoring.checker import RuleIndex
from morphoscore.scoring.scorer import score_indexed

ContrastiveReport = namedtuple('ContrastiveReport', ['pairs', 'skipped', 'accuracy',
                                                     'perfect_pairs', 'accuracy_excluding_perfect'])


def contrastive_accuracy(original, altered, rule_set):
    """
    How often the metric prefers an original sentence to its altered copy.

    Altered sentences are matched to originals by sent_id (altered id =
    original id + settings.ALTERED_SENT_ID_SUFFIX); sentences of `altered`
    without the suffix are ignored. A pair counts as correct when the
    original scores at least as high as the altered copy. Pairs where either
    score is undefined are skipped. The second accuracy leaves out pairs where
    both scores are 1.0.

    Args:
        original (Treebank): Original sentences.
        altered (Treebank): Altered copies, as written by the perturb command.
        rule_set (RuleSet): Active rules.

    Returns:
        ContrastiveReport, pair counts and accuracies (None when no pair counts).

    Raises:
        ScoringPairingError: If an altered sentence has no original.
    """
    suffix = settings.ALTERED_SENT_ID_SUFFIX
    rule_index = RuleIndex(rule_set)
    originals = {}
    for index, sentence in enumerate(original.sentences):
        originals[sentence.position_id(index)] = score_indexed(index, sentence, rule_index).score

    pairs = skipped = correct = perfect = correct_imperfect = 0
    for index, sentence in enumerate(altered.sentences):
        sent_id = sentence.sent_id
        if sent_id is None or not sent_id.endswith(suffix):
            continue
        original_id = sent_id[:-len(suffix)]
        if original_id not in originals:
            raise ScoringPairingError('no original sentence {} for {}'.format(original_id, sent_id))
        original_score = originals[original_id]
        altered_score = score_indexed(index, sentence, rule_index).score
        if original_score is None or altered_score is None:
            skipped += 1
            continue
        pairs += 1
        preferred = original_score >= altered_score
        correct += preferred
        if original_score == 1.0 and altered_score == 1.0:
            perfect += 1
        else:
            correct_imperfect += preferred

    logger.info('Contrastive evaluation: %d pairs, %d skipped.', pairs, skipped)
    return ContrastiveReport(
        pairs=pairs,
        skipped=skipped,
        accuracy=correct / pairs if pairs else None,
        perfect_pairs=perfect,
        accuracy_excluding_perfect=correct_imperfect / (pairs - perfect) if pairs > perfect else None,
    )
