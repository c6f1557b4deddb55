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
"""
Dependency treebank data model.

All structures are immutable once built, so parsed treebanks can be shared
between scoring threads without copying.
"""
import re
from collections import namedtuple
from collections.abc import Mapping

SENT_ID_PREFIX = '# sent_id ='
TEXT_PREFIX = '# text ='

_COARSE_SPLIT = re.compile(r'[:@]')


def _sort_key(name):
    return name.lower(), name


class FeatureBundle(Mapping):
    """
    Morphological features of one word, feature name to ordered value tuple.

    Names and values are kept in CoNLL-U canonical order (case-insensitive
    alphabetical), so two bundles with the same content compare and serialize
    identically whatever order they were built in.

    Examples:
        >>> bundle = FeatureBundle.parse('Number=Sing|Gender=Masc,Fem')
        >>> bundle['Gender']
        ('Fem', 'Masc')
        >>> bundle.serialize()
        'Gender=Fem,Masc|Number=Sing'
    """

    __slots__ = ('_entries',)

    def __init__(self, entries=None):
        items = {}
        for name, values in dict(entries or {}).items():
            if isinstance(values, str):
                values = (values,)
            values = tuple(sorted(set(values), key=_sort_key))
            if not name or not values:
                raise ValueError('empty feature name or value set for {!r}'.format(name))
            items[name] = values
        self._entries = dict(sorted(items.items(), key=lambda item: _sort_key(item[0])))

    @classmethod
    def parse(cls, text):
        """
        Parse the FEATS column.

        Args:
            text (str): Column text, `_` for no features.

        Returns:
            FeatureBundle, parsed bundle.

        Raises:
            ValueError: If an item has no `=` or a feature repeats.
        """
        if text == '_':
            return cls()
        entries = {}
        for item in text.split('|'):
            name, sep, values = item.partition('=')
            if not sep or not name or not values:
                raise ValueError('malformed feature {!r}'.format(item))
            if name in entries:
                raise ValueError('duplicate feature {!r}'.format(name))
            entries[name] = [value for value in values.split(',') if value]
        return cls(entries)

    def serialize(self):
        """Return the FEATS column text."""
        if not self._entries:
            return '_'
        return '|'.join('{}={}'.format(name, ','.join(values))
                        for name, values in self._entries.items())

    def value_set(self, name):
        """Values of a feature as a frozenset, empty when absent."""
        return frozenset(self._entries.get(name, ()))

    def replace(self, name, values):
        """Return a copy with one feature set to new values."""
        entries = dict(self._entries)
        entries[name] = values
        return FeatureBundle(entries)

    def __getitem__(self, name):
        return self._entries[name]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, FeatureBundle):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        return 'FeatureBundle({!r})'.format(self.serialize())


class Token(namedtuple('Token', ['id', 'form', 'lemma', 'upos', 'xpos', 'feats',
                                 'head', 'deprel', 'deps', 'misc'])):
    """
    One syntactic word row.

    `lemma` is empty text for `_`; `xpos` is None for `_`; `misc` is a tuple
    of (key, value) pairs in file order, value None for a bare item.
    """

    __slots__ = ()

    def has_feature(self, name):
        return name in self.feats

    def feature_values(self, name):
        return self.feats.value_set(name)

    def misc_value(self, key, default=None):
        for item_key, value in self.misc:
            if item_key == key:
                return value
        return default

    def with_misc(self, items):
        """
        Return a copy with MISC items set, keeping existing order.

        Args:
            items (list[tuple]): (key, value) pairs to add or overwrite.

        Returns:
            Token, updated token.
        """
        updates = dict(items)
        misc = []
        for key, value in self.misc:
            if key in updates:
                misc.append((key, updates.pop(key)))
            else:
                misc.append((key, value))
        misc.extend((key, value) for key, value in items if key in updates)
        return self._replace(misc=tuple(misc))


MultiwordToken = namedtuple('MultiwordToken', ['start', 'end', 'form', 'line'])
EmptyNode = namedtuple('EmptyNode', ['after', 'line'])
EdgeInstance = namedtuple('EdgeInstance', ['dependent', 'head', 'deprel'])


class Sentence(namedtuple('Sentence', ['comments', 'tokens', 'multiword_ranges', 'empty_nodes'])):
    """
    One parsed sentence.

    Comment lines are kept verbatim; `sent_id` and `source_text` are read
    from the `# sent_id =` and `# text =` lines.
    """

    __slots__ = ()

    def _comment_value(self, prefix):
        for comment in self.comments:
            if comment.startswith(prefix):
                return comment[len(prefix):].strip()
        return None

    @property
    def sent_id(self):
        return self._comment_value(SENT_ID_PREFIX)

    @property
    def source_text(self):
        return self._comment_value(TEXT_PREFIX)

    def position_id(self, index):
        """sent_id, or the 1-based position for sentences without one."""
        sent_id = self.sent_id
        return sent_id if sent_id is not None else str(index + 1)

    def _with_comment(self, prefix, value):
        line = '{} {}'.format(prefix, value)
        comments = list(self.comments)
        for i, comment in enumerate(comments):
            if comment.startswith(prefix):
                comments[i] = line
                break
        else:
            comments.append(line)
        return self._replace(comments=tuple(comments))

    def with_sent_id(self, sent_id):
        return self._with_comment(SENT_ID_PREFIX, sent_id)

    def with_text(self, text):
        return self._with_comment(TEXT_PREFIX, text)

    def with_token(self, token):
        """Return a copy with the token of the same id replaced."""
        tokens = list(self.tokens)
        tokens[token.id - 1] = token
        return self._replace(tokens=tuple(tokens))

    def covered_ids(self):
        """Ids of words that belong to a multiword token."""
        covered = set()
        for multiword in self.multiword_ranges:
            covered.update(range(multiword.start, multiword.end + 1))
        return covered


class Treebank(namedtuple('Treebank', ['sentences', 'origin'])):
    """Ordered sentences of one file or stream."""

    __slots__ = ()

    def __new__(cls, sentences=(), origin='<stream>'):
        return super(Treebank, cls).__new__(cls, tuple(sentences), origin)

    def token_count(self):
        return sum(len(sentence.tokens) for sentence in self.sentences)


def coarse_deprel(label):
    """
    Strip relation subtypes and extensions.

    Examples:
        >>> coarse_deprel('comp:obj@x')
        'comp'
    """
    return _COARSE_SPLIT.split(label, 1)[0]


def edges(sentence, coarse=False):
    """
    List the dependency edges of a sentence.

    Args:
        sentence (Sentence): A structurally valid sentence.
        coarse (bool): Whether to strip subtypes from relation labels. Default: False.

    Returns:
        list[EdgeInstance], one edge per non-root token, in token order.
    """
    tokens = sentence.tokens
    result = []
    for token in tokens:
        if token.head == 0:
            continue
        deprel = coarse_deprel(token.deprel) if coarse else token.deprel
        result.append(EdgeInstance(token, tokens[token.head - 1], deprel))
    return result
