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
Description: Hand-built fixtures shared by unit and functional tests.
"""
from morphoscore.rules.model import AgreementRule, AssignmentRule, RuleSet, ExtractionConfig

from .builders import row, block

# "Ich werde lange Bücher lesen" and its ungrammatical variant, where the
# auxiliary is plural and the adjective dative.
GERMAN_S1 = block([
    row(1, 'Ich', 'PRON', 'Case=Nom|Number=Sing|Person=1', 2, 'subj'),
    row(2, 'werde', 'AUX', 'Mood=Ind|Number=Sing|Person=1', 0, 'root', lemma='werden'),
    row(3, 'lange', 'ADJ', 'Case=Acc|Gender=Neut|Number=Plur', 4, 'mod', lemma='lang'),
    row(4, 'Bücher', 'NOUN', 'Case=Acc|Gender=Neut|Number=Plur', 5, 'comp:obj', lemma='Buch'),
    row(5, 'lesen', 'VERB', 'VerbForm=Inf', 2, 'comp:aux'),
], sent_id='s1', text='Ich werde lange Bücher lesen')

GERMAN_S2 = block([
    row(1, 'Ich', 'PRON', 'Case=Nom|Number=Sing|Person=1', 2, 'subj'),
    row(2, 'werden', 'AUX', 'Mood=Ind|Number=Plur|Person=1', 0, 'root', lemma='werden'),
    row(3, 'langen', 'ADJ', 'Case=Dat|Gender=Neut|Number=Plur', 4, 'mod', lemma='lang'),
    row(4, 'Bücher', 'NOUN', 'Case=Acc|Gender=Neut|Number=Plur', 5, 'comp:obj', lemma='Buch'),
    row(5, 'lesen', 'VERB', 'VerbForm=Inf', 2, 'comp:aux'),
], sent_id='s2', text='Ich werden langen Bücher lesen')

GERMAN_TEXT = GERMAN_S1 + GERMAN_S2


def german_rule_set():
    """Five agreement and two assignment rules that apply once each to either sentence."""
    agreement = [
        AgreementRule('ADJ', 'NOUN', 'mod', 'Case', 300, 0.98),
        AgreementRule('ADJ', 'NOUN', 'mod', 'Gender', 300, 0.97),
        AgreementRule('ADJ', 'NOUN', 'mod', 'Number', 300, 0.99),
        AgreementRule('PRON', 'AUX', 'subj', 'Number', 200, 0.95),
        AgreementRule('PRON', 'AUX', 'subj', 'Person', 200, 0.96),
    ]
    assignment = [
        AssignmentRule('NOUN', 'VERB', 'comp:obj', 'dependent', 'Case', ('Acc', 'Nom'), 0.911, 500),
        AssignmentRule('PRON', 'AUX', 'subj', 'dependent', 'Case', ('Nom',), 1.2, 150),
    ]
    return RuleSet('de', 'SUD', agreement, assignment, ExtractionConfig.create())


# "Στο μικρό οικισμό της Λίνδου." with its contraction split into two words.
GREEK_SENTENCE = '\n'.join([
    '# sent_id = el-1',
    '# text = Στο μικρό οικισμό της Λίνδου.',
    '1-2\tΣτο\t_\t_\t_\t_\t_\t_\t_\t_',
    row(1, 'Σε', 'ADP', '_', 4, 'case', lemma='σε'),
    row(2, 'το', 'DET', 'Case=Acc|Definite=Def|Gender=Masc|Number=Sing|PronType=Art', 4, 'det', lemma='ο'),
    row(3, 'μικρό', 'ADJ', 'Case=Acc|Gender=Masc|Number=Sing', 4, 'amod', lemma='μικρός'),
    row(4, 'οικισμό', 'NOUN', 'Case=Acc|Gender=Masc|Number=Sing', 0, 'root', lemma='οικισμός'),
    row(5, 'της', 'DET', 'Case=Gen|Definite=Def|Gender=Fem|Number=Sing|PronType=Art', 6, 'det', lemma='ο'),
    row(6, 'Λίνδου', 'PROPN', 'Case=Gen|Gender=Fem|Number=Sing', 4, 'nmod', lemma='Λίνδος'),
    row(7, '.', 'PUNCT', '_', 4, 'punct', lemma='.'),
]) + '\n\n'

GREEK_LEXICON = '\n'.join([
    'οικισμός\tοικισμό\tN;ACC;SG',
    'οικισμός\tοικισμούς\tN;ACC;PL',
    'οικισμός\tοικισμοί\tN;NOM;PL',
]) + '\n'
