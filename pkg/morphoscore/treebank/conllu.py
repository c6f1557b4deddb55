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
"""CoNLL-U reader and writer."""
from morphoscore.common.exceptions.exceptions import TreebankParseError, TreebankStructureError
from morphoscore.common.log import logger
from morphoscore.treebank.model import FeatureBundle, Token, MultiwordToken, EmptyNode, \
    Sentence, Treebank
from morphoscore.utils.tools import read_text, write_text

COLUMN_COUNT = 10


def _is_number(text):
    """Non-empty string of ASCII digits."""
    return text.isascii() and text.isdigit()


def _parse_misc(text):
    if text == '_':
        return ()
    items = []
    for item in text.split('|'):
        key, sep, value = item.partition('=')
        items.append((key, value if sep else None))
    return tuple(items)


def _serialize_misc(misc):
    if not misc:
        return '_'
    return '|'.join(key if value is None else '{}={}'.format(key, value) for key, value in misc)


def _parse_word(columns, line_no):
    """Build a Token from the ten columns of a word row."""
    try:
        feats = FeatureBundle.parse(columns[5])
    except ValueError as error:
        raise TreebankParseError(line_no, 'FEATS {}'.format(error))

    if not _is_number(columns[6]):
        raise TreebankParseError(line_no, 'head {!r} is not a non-negative integer'.format(columns[6]))
    head = int(columns[6])

    return Token(
        id=int(columns[0]),
        form=columns[1],
        lemma='' if columns[2] == '_' else columns[2],
        upos=columns[3],
        xpos=None if columns[4] == '_' else columns[4],
        feats=feats,
        head=head,
        deprel=columns[7],
        deps=columns[8],
        misc=_parse_misc(columns[9]),
    )


def _serialize_word(token):
    return '\t'.join([
        str(token.id),
        token.form,
        token.lemma or '_',
        token.upos,
        token.xpos if token.xpos is not None else '_',
        token.feats.serialize(),
        str(token.head),
        token.deprel,
        token.deps,
        _serialize_misc(token.misc),
    ])


class _SentenceBuilder:
    """Collects the lines of one sentence block."""

    def __init__(self, first_line):
        self.first_line = first_line
        self.comments = []
        self.tokens = []
        self.multiwords = []
        self.empty_nodes = []

    def add(self, line, line_no):
        if line.startswith('#'):
            self.comments.append(line)
            return

        columns = line.split('\t')
        if len(columns) != COLUMN_COUNT:
            raise TreebankParseError(
                line_no, 'expected {} columns, found {}'.format(COLUMN_COUNT, len(columns)))

        token_id = columns[0]
        if '-' in token_id:
            start, _, end = token_id.partition('-')
            if not (_is_number(start) and _is_number(end)) or int(start) > int(end):
                raise TreebankParseError(line_no, 'invalid range id {!r}'.format(token_id))
            self.multiwords.append(MultiwordToken(int(start), int(end), columns[1], line))
        elif '.' in token_id:
            after, _, minor = token_id.partition('.')
            if not (_is_number(after) and _is_number(minor)):
                raise TreebankParseError(line_no, 'invalid empty node id {!r}'.format(token_id))
            self.empty_nodes.append(EmptyNode(int(after), line))
        elif _is_number(token_id):
            self.tokens.append(_parse_word(columns, line_no))
        else:
            raise TreebankParseError(line_no, 'invalid id {!r}'.format(token_id))

    def build(self):
        if not self.tokens:
            raise TreebankParseError(self.first_line, 'sentence block without word rows')
        return Sentence(tuple(self.comments), tuple(self.tokens),
                        tuple(self.multiwords), tuple(self.empty_nodes))


def validate_sentence(sentence, label):
    """
    Check that the head graph of a sentence is a single rooted tree.

    Args:
        sentence (Sentence): Sentence to check.
        label (str): Name used in error messages, normally the sent_id.

    Raises:
        TreebankStructureError: If ids are not 1..n, a head is missing, a
            token heads itself, there is not exactly one root or heads cycle.
    """
    tokens = sentence.tokens
    count = len(tokens)
    for index, token in enumerate(tokens):
        if token.id != index + 1:
            raise TreebankStructureError(
                label, 'token ids are not contiguous at id {}'.format(token.id))
        if token.head == token.id:
            raise TreebankStructureError(label, 'token {} is its own head'.format(token.id))
        if token.head > count:
            raise TreebankStructureError(
                label, 'token {} has missing head {}'.format(token.id, token.head))

    roots = [token.id for token in tokens if token.head == 0]
    if len(roots) != 1:
        raise TreebankStructureError(
            label, 'expected exactly one root, found {}'.format(len(roots)))

    # Every path upwards must reach the root within `count` steps.
    reaches_root = {roots[0]}
    for token in tokens:
        path = []
        current = token.id
        while current not in reaches_root and current != 0:
            if current in path:
                raise TreebankStructureError(
                    label, 'cycle through tokens {}'.format(sorted(path)))
            path.append(current)
            current = tokens[current - 1].head
        reaches_root.update(path)


def validate_treebank(treebank):
    """
    Validate every sentence and the uniqueness of sent_ids.

    Args:
        treebank (Treebank): Treebank to check.

    Raises:
        TreebankStructureError: On the first invalid sentence.
    """
    seen = set()
    for index, sentence in enumerate(treebank.sentences):
        label = sentence.position_id(index)
        validate_sentence(sentence, label)
        sent_id = sentence.sent_id
        if sent_id is None:
            continue
        if sent_id in seen:
            raise TreebankStructureError(sent_id, 'duplicate sent_id')
        seen.add(sent_id)


def parse_treebank(stream, origin=None):
    """
    Parse CoNLL-U text.

    Args:
        stream (Union[str, TextIO]): CoNLL-U text or a readable text stream.
        origin (str): Name recorded on the treebank. Default: the stream name or `<stream>`.

    Returns:
        Treebank, parsed and validated treebank.

    Raises:
        TreebankParseError: If a row is malformed.
        TreebankStructureError: If a sentence is not a single rooted tree.

    Examples:
        >>> treebank = parse_treebank(open('de_gsd-sud-train.conllu', encoding='utf-8'))
        >>> len(treebank.sentences)
    """
    if hasattr(stream, 'read'):
        if origin is None:
            origin = getattr(stream, 'name', None)
        text = stream.read()
    else:
        text = stream
    if origin is None:
        origin = '<stream>'
    if text.startswith('\ufeff'):
        text = text[1:]

    sentences = []
    builder = None
    for line_no, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip():
            if builder is not None:
                sentences.append(builder.build())
                builder = None
            continue
        if builder is None:
            builder = _SentenceBuilder(line_no)
        builder.add(line, line_no)
    if builder is not None:
        sentences.append(builder.build())

    treebank = Treebank(sentences, origin)
    validate_treebank(treebank)
    logger.info('Parsed %s: %d sentences, %d tokens.', origin, len(sentences), treebank.token_count())
    return treebank


def serialize_sentence(sentence):
    """Return the CoNLL-U block of one sentence, ending with a blank line."""
    lines = list(sentence.comments)
    empties = {}
    for node in sentence.empty_nodes:
        empties.setdefault(node.after, []).append(node.line)
    multiwords = {}
    for multiword in sentence.multiword_ranges:
        multiwords.setdefault(multiword.start, []).append(multiword.line)

    lines.extend(empties.get(0, []))
    for token in sentence.tokens:
        lines.extend(multiwords.get(token.id, []))
        lines.append(_serialize_word(token))
        lines.extend(empties.get(token.id, []))
    return '\n'.join(lines) + '\n\n'


def serialize_treebank(treebank):
    """
    Serialize a treebank to CoNLL-U text.

    Args:
        treebank (Treebank): Structurally valid treebank.

    Returns:
        str, CoNLL-U text; empty for a treebank without sentences.
    """
    return ''.join(serialize_sentence(sentence) for sentence in treebank.sentences)


def load_treebank(path):
    """
    Read and parse a CoNLL-U file.

    Args:
        path (str): File path.

    Returns:
        Treebank, parsed treebank whose origin is the path.
    """
    return parse_treebank(read_text(path), origin=path)


def dump_treebank(treebank, path):
    """Write a treebank to a CoNLL-U file."""
    write_text(path, serialize_treebank(treebank))
