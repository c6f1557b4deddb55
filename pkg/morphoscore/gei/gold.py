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
"""Gold grammar-error annotations."""
from morphoscore.common.exceptions.exceptions import GoldFormatError, GoldUnresolvedError
from morphoscore.common.log import logger
from morphoscore.utils.tools import read_text

GOLD_MISC_KEY = 'GoldError'


class GoldErrors:
    """
    Token-level gold error marks.

    Args:
        marks (Iterable[tuple]): (sent_id, token_id) pairs. Sentences without
            a sent_id are addressed by their 1-based position.
    """

    def __init__(self, marks=()):
        self.marks = frozenset((str(sent_id), int(token_id)) for sent_id, token_id in marks)

    def __contains__(self, mark):
        return mark in self.marks

    def __len__(self):
        return len(self.marks)

    def validate(self, treebank):
        """
        Check that every mark names an existing token.

        Raises:
            GoldUnresolvedError: For the first mark, in sorted order, that does not resolve.
        """
        token_ids = {}
        for index, sentence in enumerate(treebank.sentences):
            token_ids[sentence.position_id(index)] = len(sentence.tokens)
        for sent_id, token_id in sorted(self.marks):
            if sent_id not in token_ids:
                raise GoldUnresolvedError('no sentence {}'.format(sent_id))
            if not 1 <= token_id <= token_ids[sent_id]:
                raise GoldUnresolvedError('no token {} in sentence {}'.format(token_id, sent_id))


def load_gold_tsv(stream):
    """
    Read a `sent_id<TAB>token_id` sidecar.

    A first line whose token_id is not an integer is taken as a header.

    Args:
        stream (Union[str, TextIO]): TSV text or readable stream.

    Returns:
        GoldErrors, loaded marks.

    Raises:
        GoldFormatError: If a row is malformed.
    """
    text = stream.read() if hasattr(stream, 'read') else stream
    marks = []
    first = True
    for line_no, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip():
            continue
        columns = line.split('\t')
        if len(columns) != 2:
            raise GoldFormatError('line {}: expected 2 columns, found {}'.format(line_no, len(columns)))
        sent_id, token_id = columns
        try:
            token_id = int(token_id)
        except ValueError:
            if first:
                first = False
                continue
            raise GoldFormatError('line {}: token id {!r} is not an integer'.format(line_no, token_id))
        first = False
        if not sent_id or token_id < 1:
            raise GoldFormatError('line {}: invalid mark'.format(line_no))
        marks.append((sent_id, token_id))
    return GoldErrors(marks)


def load_gold_file(path):
    return load_gold_tsv(read_text(path))


def gold_from_misc(treebank):
    """Marks of tokens carrying `GoldError=Yes` in MISC."""
    marks = []
    for index, sentence in enumerate(treebank.sentences):
        sent_id = sentence.position_id(index)
        marks.extend((sent_id, token.id) for token in sentence.tokens
                     if token.misc_value(GOLD_MISC_KEY) == 'Yes')
    logger.info('Read %d gold error marks from MISC.', len(marks))
    return GoldErrors(marks)
