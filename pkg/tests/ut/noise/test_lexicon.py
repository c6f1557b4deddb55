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
Function:
    Test the UniMorph lexicon reader.
Usage:
    pytest tests/ut/noise
"""
import io
import os
import tempfile

import pytest

from morphoscore.common.exceptions.exceptions import LexiconParseError
from morphoscore.noise.lexicon import load_unimorph, load_unimorph_file, LexiconEntry

from ...utils.fixtures import GREEK_LEXICON


class TestLoadUnimorph:
    """Test load_unimorph."""

    def test_greek_paradigm(self):
        """Rows are grouped by lemma in file order."""
        lexicon = load_unimorph(GREEK_LEXICON)
        assert len(lexicon) == 1
        assert lexicon.entry_count() == 3
        assert lexicon.entries('οικισμός')[1] == LexiconEntry('οικισμούς', frozenset({'N', 'ACC', 'PL'}))
        assert lexicon.entries('μικρός') == []

    def test_stream_blank_lines_and_crlf(self):
        """Streams, blank lines and CRLF endings are accepted."""
        lexicon = load_unimorph(io.StringIO('a\tb\tN;SG\r\n\r\n\na\tc\tN;PL\r\n'))
        assert [entry.form for entry in lexicon.entries('a')] == ['b', 'c']

    def test_first_form_wins(self):
        """A repeated lemma and tag set keeps the first form."""
        lexicon = load_unimorph('a\tb\tN;SG\na\tb2\tSG;N\n')
        assert [entry.form for entry in lexicon.entries('a')] == ['b']

    def test_extra_columns(self):
        """Columns after the tags are ignored."""
        lexicon = load_unimorph('a\tb\tN;SG\tsegmentation\n')
        assert lexicon.entries('a')[0].tags == frozenset({'N', 'SG'})

    @pytest.mark.parametrize('text, line_no', [
        ('a\tb\n', 1),
        ('a\tb\tN\n\n\tc\tN\n', 3),
        ('a\tb\t;\n', 1),
    ])
    def test_malformed(self, text, line_no):
        """Malformed rows name their line."""
        with pytest.raises(LexiconParseError) as error:
            load_unimorph(text)
        assert error.value.line_no == line_no

    def test_file(self):
        """Lexicon files are read as UTF-8."""
        path = os.path.join(tempfile.mkdtemp(), 'ell.tsv')
        with open(path, 'w', encoding='utf-8') as file:
            file.write(GREEK_LEXICON)
        assert load_unimorph_file(path).entry_count() == 3
