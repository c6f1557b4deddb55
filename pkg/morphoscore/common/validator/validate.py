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
"""Validate the parameters."""
from marshmallow import ValidationError

from morphoscore.common.exceptions.exceptions import RuleParamError, RuleFileError
from morphoscore.common.log import logger as log
from morphoscore.common.validator.schemas import ExtractionConfigSchema, RuleFileSchema

EXTRACTION_CONFIG_ERROR_MSG_MAPPING = {
    'agree_threshold': 'agree_threshold should be a number in (0, 1].',
    'agree_coverage': 'agree_coverage should be a number in (0, 1].',
    'kl_threshold': 'kl_threshold should be a non-negative number.',
    'min_relation_count': 'min_relation_count should be a positive integer.',
    'value_inclusion_threshold': 'value_inclusion_threshold should be a number in (0, 1].',
    'kl_epsilon': 'kl_epsilon should be a positive number.',
    'coarse_deprel': 'coarse_deprel should be a boolean.',
}


def _first_error(messages, path=()):
    """
    Find the first leaf of a marshmallow error dict.

    Returns:
        tuple, (field path list, message).
    """
    if isinstance(messages, dict):
        for key in sorted(messages, key=str):
            return _first_error(messages[key], path + (key,))
    if isinstance(messages, (list, tuple)) and messages:
        return _first_error(messages[0], path)
    return list(path), str(messages)


def validate_extraction_config(data):
    """
    Verify the extraction config values.

    Args:
        data (dict): Config fields.

    Returns:
        dict, deserialized config.

    Raises:
        RuleParamError: If any field is missing, unknown or out of range.
    """
    try:
        return ExtractionConfigSchema().load(data)
    except ValidationError as error:
        path, message = _first_error(error.messages)
        field = path[0] if path else ''
        detail = EXTRACTION_CONFIG_ERROR_MSG_MAPPING.get(field, '{}: {}'.format(field, message))
        log.error('Invalid extraction config: %s', error.messages)
        raise RuleParamError(detail)


def validate_rule_file(data):
    """
    Verify the content of a rule file.

    Args:
        data (dict): Decoded JSON object.

    Returns:
        dict, deserialized content.

    Raises:
        RuleFileError: If the content does not match the rule file schema.
    """
    if not isinstance(data, dict):
        raise RuleFileError('Top level must be a JSON object.')
    try:
        return RuleFileSchema().load(data)
    except ValidationError as error:
        path, message = _first_error(error.messages)
        location = '.'.join(str(item) for item in path)
        log.error('Invalid rule file: %s', error.messages)
        raise RuleFileError('{}: {}'.format(location, message))
