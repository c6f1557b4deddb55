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
"""UniMorph inflection lexicon."""
from collections import namedtuple

from morphoscore.common.exceptions.exceptions import LexiconParseError
from morphoscore.common.log import logger
from morphoscore.utils.tools import read_text

LexiconEntry = namedtuple('LexiconEntry', ['form', 'tags'])


class InflectionLexicon:
    """
    Paradigms indexed by lemma.

    Args:
        paradigms (dict): Lemma to list of LexiconEntry.
    """

    def __init__(self, paradigms=None):
        self.paradigms = dict(paradigms or {})

    def entries(self, lemma):
        return self.paradigms.get(lemma, [])

    def __len__(self):
        return len(self.paradigms)

    def entry_count(self):
        return sum(len(entries) for entries in self.paradigms.values())


def load_unimorph(stream):
    """
    Read a UniMorph TSV, one `lemma<TAB>form<TAB>tag;tag;...` row per line.

    Blank lines are skipped; extra columns are ignored. For repeated
    (lemma, tag set) rows the first form wins.

    Args:
        stream (Union[str, TextIO]): TSV text or readable stream.

    Returns:
        InflectionLexicon, loaded lexicon.

    Raises:
        LexiconParseError: If a row has fewer than 3 columns or no tag.
    """
    text = stream.read() if hasattr(stream, 'read') else stream
    paradigms = {}
    seen = set()
    for line_no, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip():
            continue
        columns = line.split('\t')
        if len(columns) < 3:
            raise LexiconParseError(line_no, 'expected 3 columns, found {}'.format(len(columns)))
        lemma, form, tag_text = columns[0], columns[1], columns[2]
        tags = frozenset(tag for tag in tag_text.split(';') if tag)
        if not lemma or not form or not tags:
            raise LexiconParseError(line_no, 'empty lemma, form or tag set')
        if (lemma, tags) in seen:
            continue
        seen.add((lemma, tags))
        paradigms.setdefault(lemma, []).append(LexiconEntry(form, tags))

    lexicon = InflectionLexicon(paradigms)
    logger.info('Loaded inflection lexicon: %d lemmata, %d forms.', len(lexicon), lexicon.entry_count())
    return lexicon


def load_unimorph_file(path):
    """Read a UniMorph TSV file."""
    return load_unimorph(read_text(path))
