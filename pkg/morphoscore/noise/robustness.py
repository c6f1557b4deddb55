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
"""Parser accuracy on noised treebanks."""
from collections import namedtuple, Counter

from morphoscore.common.exceptions.exceptions import TreebankAlignmentError
from morphoscore.common.log import logger
from morphoscore.utils.tools import to_json_number

METRICS = ('upos', 'ufeats', 'uas', 'las')

ParseScores = namedtuple('ParseScores', ['tokens', 'upos', 'ufeats', 'uas', 'las'])
ParseReport = namedtuple('ParseReport', ['overall', 'altered'])


def _scores(counter):
    tokens = counter['tokens']
    if not tokens:
        return ParseScores(0, None, None, None, None)
    return ParseScores(tokens, *(counter[metric] / tokens for metric in METRICS))


def evaluate_parse(gold, predicted):
    """
    Compare a predicted parse with the gold noised treebank.

    Sentences and tokens are aligned by position. Tokens marked `Altered=Yes`
    in the gold MISC are also scored separately.

    Args:
        gold (Treebank): Gold treebank, typically written by perturb_treebank.
        predicted (Treebank): Parser output on the same sentences.

    Returns:
        ParseReport, scores over all tokens and over altered tokens.

    Raises:
        TreebankAlignmentError: If sentence or token counts differ.
    """
    if len(gold.sentences) != len(predicted.sentences):
        raise TreebankAlignmentError('{} gold sentences but {} predicted'.format(
            len(gold.sentences), len(predicted.sentences)))

    overall = Counter()
    altered = Counter()
    for index, (gold_sentence, pred_sentence) in enumerate(zip(gold.sentences, predicted.sentences)):
        if len(gold_sentence.tokens) != len(pred_sentence.tokens):
            raise TreebankAlignmentError('sentence {} has {} gold tokens but {} predicted'.format(
                gold_sentence.position_id(index), len(gold_sentence.tokens), len(pred_sentence.tokens)))
        for gold_token, pred_token in zip(gold_sentence.tokens, pred_sentence.tokens):
            counters = [overall]
            if gold_token.misc_value('Altered') == 'Yes':
                counters.append(altered)
            attached = gold_token.head == pred_token.head
            for counter in counters:
                counter['tokens'] += 1
                counter['upos'] += gold_token.upos == pred_token.upos
                counter['ufeats'] += gold_token.feats == pred_token.feats
                counter['uas'] += attached
                counter['las'] += attached and gold_token.deprel == pred_token.deprel

    report = ParseReport(_scores(overall), _scores(altered))
    logger.info('Evaluated %d tokens, %d altered.', report.overall.tokens, report.altered.tokens)
    return report


def parse_report_to_dict(report):
    """JSON-compatible form of a ParseReport, `NA` for undefined scores."""
    data = {}
    for name, scores in (('overall', report.overall), ('altered', report.altered)):
        entry = {'tokens': scores.tokens}
        entry.update({metric: to_json_number(getattr(scores, metric)) for metric in METRICS})
        data[name] = entry
    return data
