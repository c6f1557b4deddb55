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
"""Rule file reading and writing."""
import json

from morphoscore.common.exceptions.exceptions import RuleFileError, RuleParamError
from morphoscore.common.log import logger
from morphoscore.common.validator.validate import validate_rule_file
from morphoscore.conf import settings
from morphoscore.rules.model import AgreementRule, AssignmentRule, ExtractionConfig, RuleSet, \
    find_duplicate_label
from morphoscore.utils.tools import round_float, dump_json, sha256_text, read_text, write_text


def rules_to_dict(rule_set):
    """
    Convert a rule set to the rule file object.

    Args:
        rule_set (RuleSet): Rules to convert.

    Returns:
        dict, JSON-compatible rule file content.
    """
    agreement = [{
        'dep_pos': rule.dep_pos,
        'head_pos': rule.head_pos,
        'deprel': rule.deprel,
        'feature': rule.feature,
        'support': rule.support,
        'agree_fraction': round_float(rule.agree_fraction),
    } for rule in rule_set.agreement]
    assignment = [{
        'target_pos': rule.target_pos,
        'other_pos': rule.other_pos,
        'deprel': rule.deprel,
        'side': rule.side,
        'feature': rule.feature,
        'allowed_values': list(rule.allowed_values),
        'kl': round_float(rule.kl),
        'support': rule.support,
    } for rule in rule_set.assignment]
    return {
        'version': settings.RULE_FILE_VERSION,
        'language': rule_set.language,
        'schema': rule_set.schema,
        'config': rule_set.config.to_dict(),
        'agreement': agreement,
        'assignment': assignment,
    }


def dumps_rules(rule_set):
    """Serialize a rule set to rule file text."""
    return dump_json(rules_to_dict(rule_set))


def loads_rules(text):
    """
    Parse rule file text.

    Args:
        text (str): Rule file content.

    Returns:
        RuleSet, loaded rules.

    Raises:
        RuleFileError: If the text is not valid JSON, has an unknown version,
            does not match the schema or repeats a rule key.
    """
    try:
        data = json.loads(text)
    except ValueError as error:
        raise RuleFileError('not valid JSON: {}'.format(error))

    if not isinstance(data, dict):
        raise RuleFileError('Top level must be a JSON object.')
    version = data.get('version')
    if version != settings.RULE_FILE_VERSION or isinstance(version, bool):
        raise RuleFileError('unsupported version {!r}, expected {}'.format(
            version, settings.RULE_FILE_VERSION))

    data = validate_rule_file(data)
    agreement = [AgreementRule(**entry) for entry in data['agreement']]
    assignment = [AssignmentRule(**dict(entry, allowed_values=tuple(entry['allowed_values'])))
                  for entry in data['assignment']]
    for kind, rules in (('agreement', agreement), ('assignment', assignment)):
        duplicate = find_duplicate_label(rules)
        if duplicate:
            raise RuleFileError('duplicate {} rule key {}'.format(kind, duplicate))

    try:
        config = ExtractionConfig.create(**data['config'])
    except RuleParamError as error:
        raise RuleFileError(error.message)
    logger.info('Loaded %d agreement and %d assignment rules.', len(agreement), len(assignment))
    return RuleSet(data['language'], data['schema'], agreement, assignment, config)


def save_rules(rule_set, stream):
    """
    Write a rule set to a stream or path.

    Args:
        rule_set (RuleSet): Rules to write.
        stream (Union[str, TextIO]): Writable text stream or file path.
    """
    text = dumps_rules(rule_set)
    if hasattr(stream, 'write'):
        stream.write(text)
    else:
        write_text(stream, text)


def load_rules(stream):
    """
    Read a rule set from a stream or path.

    Args:
        stream (Union[str, TextIO]): Readable text stream or file path.

    Returns:
        RuleSet, loaded rules.
    """
    text = stream.read() if hasattr(stream, 'read') else read_text(stream)
    return loads_rules(text)


def rule_hash(rule_set):
    """sha256 of the canonical rule file text, for report provenance."""
    return sha256_text(dumps_rules(rule_set))
