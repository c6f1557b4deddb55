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
"""Morphology-noised treebank synthesis."""
import re
from collections import namedtuple

import numpy as np

from morphoscore.common.log import logger
from morphoscore.common.sharding import map_shards
from morphoscore.conf import settings
from morphoscore.noise.mapping import UPOS_FEATURE
from morphoscore.treebank.model import Treebank
from morphoscore.utils.exceptions import ParamValueError

AlterationRecord = namedtuple('AlterationRecord', ['sent_id', 'token_id', 'original_form', 'altered_form',
                                                   'changed_feature', 'original_value', 'altered_value'])

MANIFEST_HEADER = ('sent_id', 'token_id', 'orig_form', 'new_form', 'feature', 'orig_value', 'new_value')


class PerturbationResult(namedtuple('PerturbationResult', ['treebank', 'records', 'total'])):
    """Output treebank, one record per altered sentence and the input sentence count."""

    __slots__ = ()

    @property
    def altered(self):
        return len(self.records)

    @property
    def coverage(self):
        if not self.total:
            return 0.0
        return self.altered / self.total


def _entry_dimensions(entry, feature_mapping):
    """UD dimension to tag for the mapped tags of a lexicon entry, None if two tags share a dimension."""
    dimensions = {}
    for tag in entry.tags:
        resolved = feature_mapping.resolve(tag)
        if resolved is None:
            continue
        feature = resolved[0]
        if feature in dimensions:
            return None
        dimensions[feature] = tag
    return dimensions


def candidate_alterations(token, lexicon, feature_mapping):
    """
    Alternate inflections of a token that differ in exactly one feature.

    Entry tags the mapping does not know are ignored. The remaining tags of an
    entry must all name dimensions the token has, must agree with the token
    on every dimension but one, and that one must not be UPOS. A token
    dimension may be absent from an entry only when no entry of the lemma
    marks it, so a non-finite form never stands in for a finite one.

    Args:
        token (Token): Token to inflect.
        lexicon (InflectionLexicon): Paradigms.
        feature_mapping (FeatureMapping): UD to UniMorph mapping.

    Returns:
        list[tuple], (form, UD feature, new UD value) in lexicon order.
    """
    if not token.lemma or not token.feats:
        return []
    entries = lexicon.entries(token.lemma)
    if not entries:
        return []

    token_dimensions = feature_mapping.token_dimensions(token)
    entry_dimensions = [(entry, _entry_dimensions(entry, feature_mapping)) for entry in entries]
    paradigm = set()
    for _, dimensions in entry_dimensions:
        paradigm.update(dimensions or ())

    candidates = []
    for entry, dimensions in entry_dimensions:
        # Multi-word forms can not stand in for one syntactic word.
        if entry.form == token.form or any(char.isspace() for char in entry.form):
            continue
        if not dimensions or not set(dimensions) <= set(token_dimensions):
            continue
        if (set(token_dimensions) - set(dimensions)) & paradigm:
            continue
        changed = [feature for feature, tag in dimensions.items() if token_dimensions[feature] != tag]
        if len(changed) != 1 or changed[0] == UPOS_FEATURE:
            continue
        feature = changed[0]
        candidate = (entry.form, feature, feature_mapping.resolve(dimensions[feature])[1])
        if candidate not in candidates:
            candidates.append(candidate)
    return candidates


def _eligible(token, covered, feature_mapping):
    if token.id in covered:
        return False
    for feature, values in token.feats.items():
        if len(values) > 1 and feature_mapping.tag(feature, values[0]) is not None:
            return False
    return True


def _rewrite_text(sentence, token, new_form):
    """Replace the token's occurrence in the text comment, None if it cannot be aligned."""
    text = sentence.source_text
    if not text:
        return None
    occurrence = sum(1 for other in sentence.tokens[:token.id - 1] if other.form == token.form)
    matches = list(re.finditer(r"(?<!\w){}(?!\w)".format(re.escape(token.form)), text))
    if len(matches) <= occurrence:
        return None
    match = matches[occurrence]
    return text[:match.start()] + new_form + text[match.end():]


def _alter_sentence(index, sentence, lexicon, feature_mapping, seed, keep_gold_feats):
    """Altered copy of one sentence and its record, (None, None) without candidates."""
    covered = sentence.covered_ids()
    options = []
    for token in sentence.tokens:
        if not _eligible(token, covered, feature_mapping):
            continue
        candidates = candidate_alterations(token, lexicon, feature_mapping)
        if candidates:
            options.append((token, candidates))
    if not options:
        return None, None

    rng = np.random.default_rng([seed, index])
    token, candidates = options[int(rng.integers(len(options)))]
    new_form, feature, new_value = candidates[int(rng.integers(len(candidates)))]
    original_value = token.feats[feature][0]

    altered_token = token._replace(form=new_form)
    if not keep_gold_feats:
        altered_token = altered_token._replace(feats=token.feats.replace(feature, (new_value,)))
    altered_token = altered_token.with_misc([('Altered', 'Yes'), ('OrigForm', token.form),
                                             ('ChangedFeat', feature)])

    sent_id = sentence.position_id(index)
    altered = sentence.with_token(altered_token).with_sent_id(sent_id + settings.ALTERED_SENT_ID_SUFFIX)
    text = _rewrite_text(sentence, token, new_form)
    if text is not None:
        altered = altered.with_text(text)
    elif sentence.source_text:
        logger.debug('Could not align token %d of sentence %s with its text.', token.id, sent_id)

    record = AlterationRecord(sent_id, token.id, token.form, new_form, feature, original_value, new_value)
    return altered, record


def perturb_treebank(treebank, lexicon, feature_mapping, seed=None, concat=False, keep_gold_feats=False, jobs=1):
    """
    Make at most one altered copy per sentence.

    A token with candidates is drawn uniformly, then one of its candidates.
    Each sentence draws from its own generator seeded with (seed, index), so
    the output does not depend on `jobs`.

    Args:
        treebank (Treebank): Input sentences.
        lexicon (InflectionLexicon): Paradigms.
        feature_mapping (FeatureMapping): UD to UniMorph mapping.
        seed (int): Random seed. Default: settings.DEFAULT_SEED.
        concat (bool): Emit each original followed by its altered copy. Default: False.
        keep_gold_feats (bool): Keep the original FEATS on the altered token. Default: False.
        jobs (int): Worker threads. Default: 1.

    Returns:
        PerturbationResult, the output treebank and the alteration records.
    """
    if seed is None:
        seed = settings.DEFAULT_SEED
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ParamValueError('seed should be a non-negative integer.')

    def alter_shard(offset, sentences):
        return [_alter_sentence(offset + i, sentence, lexicon, feature_mapping, seed, keep_gold_feats)
                for i, sentence in enumerate(sentences)]

    sentences = []
    records = []
    results = [item for shard in map_shards(alter_shard, treebank.sentences, jobs) for item in shard]
    for original, (altered, record) in zip(treebank.sentences, results):
        if concat:
            sentences.append(original)
        if altered is not None:
            sentences.append(altered)
            records.append(record)

    result = PerturbationResult(Treebank(sentences, treebank.origin), records, len(treebank.sentences))
    logger.info('Altered %d of %d sentences (coverage %.2f%%).',
                result.altered, result.total, 100 * result.coverage)
    if result.altered < result.total:
        logger.warning('%d sentences have no alternate inflection in the lexicon.',
                       result.total - result.altered)
    return result


def records_to_tsv(records):
    """
    Alteration manifest.

    Returns:
        str, TSV text, one row per altered sentence.
    """
    lines = ['\t'.join(MANIFEST_HEADER)]
    for record in records:
        lines.append('\t'.join(str(value) for value in record))
    return '\n'.join(lines) + '\n'
