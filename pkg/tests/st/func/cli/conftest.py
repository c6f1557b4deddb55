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
"""The st config."""
import os
import tempfile

import pytest

from morphoscore.rules.rulefile import save_rules

from ....utils.fixtures import GERMAN_S1, GERMAN_TEXT, GREEK_SENTENCE, GREEK_LEXICON, german_rule_set
from ....utils.synthetic import synthetic_treebank_text, synthetic_lexicon_text

BASE_DIR = tempfile.mkdtemp(prefix='test_morphoscore_cli_')

FIVE_SYSTEMS_TSV = 'system\tmetric\tjudgment\n' \
                   'sys1\t0.91\t0.10\n' \
                   'sys2\t0.93\t0.11\n' \
                   'sys3\t0.92\t0.12\n' \
                   'sys4\t0.95\t0.13\n' \
                   'sys5\t0.60\t-5.0\n'


def _write(name, text):
    path = os.path.join(BASE_DIR, name)
    with open(path, 'w', encoding='utf-8') as file:
        file.write(text)
    return path


def _grammatical_corpus(copies):
    return ''.join(GERMAN_S1.replace('# sent_id = s1', '# sent_id = g{}'.format(i)) for i in range(copies))


@pytest.fixture(scope='session')
def cli_files():
    """Input files shared by the command tests."""
    rules_path = os.path.join(BASE_DIR, 'german_rules.json')
    save_rules(german_rule_set(), rules_path)
    return {
        'german': _write('german.conllu', GERMAN_TEXT),
        'german_rules': rules_path,
        'grammatical': _write('grammatical.conllu', _grammatical_corpus(200)),
        'greek': _write('greek.conllu', GREEK_SENTENCE),
        'greek_lexicon': _write('greek.tsv', GREEK_LEXICON),
        'synthetic': _write('synthetic.conllu', synthetic_treebank_text(42, sentences=200)),
        'synthetic_1k': _write('synthetic_1k.conllu', synthetic_treebank_text(2021, sentences=1000)),
        'synthetic_lexicon': _write('synthetic.tsv', synthetic_lexicon_text(
            ['w{}'.format(i) for i in range(1, 16)])),
        'gold': _write('gold.tsv', 'sent_id\ttoken_id\ns2\t2\n'),
        'bad_gold': _write('bad_gold.tsv', 's9\t1\n'),
        'systems': _write('systems.tsv', FIVE_SYSTEMS_TSV),
        'broken': _write('broken.conllu', '1\ta\ta\tNOUN\t_\t_\t0\troot\t_\n\n'),
    }


@pytest.fixture
def out_dir():
    """Fresh output directory."""
    return tempfile.mkdtemp(dir=BASE_DIR)
