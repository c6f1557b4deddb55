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
"""Morphosyntactic rule model, extraction and rule files."""
from morphoscore.rules.model import AgreementRule, AssignmentRule, Distribution, \
    ExtractionConfig, RuleSet
from morphoscore.rules.divergence import kl_divergence
from morphoscore.rules.extraction import AgreementExtractor, AssignmentExtractor, \
    extract_agreement_rules, extract_assignment_rules, extract_rules, extraction_summary
from morphoscore.rules.rulefile import save_rules, load_rules, dumps_rules, loads_rules, \
    rules_to_dict, rule_hash

__all__ = [
    'AgreementRule', 'AssignmentRule', 'Distribution', 'ExtractionConfig', 'RuleSet',
    'kl_divergence', 'AgreementExtractor', 'AssignmentExtractor',
    'extract_agreement_rules', 'extract_assignment_rules', 'extract_rules', 'extraction_summary',
    'save_rules', 'load_rules', 'dumps_rules', 'loads_rules', 'rules_to_dict', 'rule_hash',
]
